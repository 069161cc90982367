#ifndef HOMLEX_GRAPH_HPP
#define HOMLEX_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "homlex/bitset.hpp"

namespace homlex {

/// Finite simple graph with an optional loop flag per vertex. Adjacency is
/// symmetric and irreflexive; self-adjacency lives only in the loop set.
/// Source graphs in extremal searches are loop-free; image graphs may be
/// looped. Immutable by convention once built.
class Graph {
  public:
    Graph() : Graph(0) {}
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), loops_(n) {}

    int order() const { return n_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

    void add_loop(int v) { loops_.set(v); }
    bool has_loop(int v) const { return loops_.test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    const Bitset& loops() const { return loops_; }

    int degree(int v) const { return adj_[v].count(); }
    std::int64_t edge_count() const;
    int loop_count() const { return loops_.count(); }
    bool loop_free() const { return loops_.none(); }

    /// Unordered adjacent pairs, u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const = default;

  private:
    int n_;
    std::vector<Bitset> adj_;
    Bitset loops_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

/// Disjoint union; the second operand's vertices are relabeled upward.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join: disjoint union plus every cross edge.
Graph join(const Graph& a, const Graph& b);

/// Unlooped vertices of degree zero.
int count_isolates(const Graph& g);

} // namespace homlex

#endif
