#ifndef HOMLEX_LEX_HPP
#define HOMLEX_LEX_HPP

#include <cstdint>

#include "homlex/graph.hpp"

namespace homlex {

/// The (n, k, w) shape of a lex graph: split graph S(n,k) plus a w-edge star
/// in the empty part, m = C(k,2) + k(n-k) + w. Normal form keeps
/// 0 <= w <= n-k-2; the complete graph is the one exception, (k,w) = (n-1,0).
struct LexParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t w = 0;
    std::int64_t m = 0;

    bool operator==(const LexParams&) const = default;
};

/// First m vertex pairs of {0..n-1} in lexicographic order.
Graph lex_graph(int n, std::int64_t m);

/// First m vertex pairs in colexicographic order (A < B iff max(A^B) in B).
Graph colex_graph(int n, std::int64_t m);

/// Unique normal-form decomposition of (n, m). Arithmetic only, no graph is
/// built, so it is cheap for very large n.
LexParams lex_decompose(std::int64_t n, std::int64_t m);

/// Join of K_k with E_{n-k}; the clique occupies vertices 0..k-1.
Graph split_graph(int n, int k);

/// S°(p,q): p pairwise-adjacent looped vertices joined to q unlooped
/// isolated ones. Loop-threshold code 1^p 0^q in display order.
Graph clique_looped_split(int p, int q);

/// Edge count of S(n,k).
constexpr std::int64_t split_edges(std::int64_t n, std::int64_t k) {
    return k * (k - 1) / 2 + k * (n - k);
}

} // namespace homlex

#endif
