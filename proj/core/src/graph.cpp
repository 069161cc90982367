#include "homlex/graph.hpp"

#include <cassert>

namespace homlex {

void Graph::add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    adj_[u].set(v);
    adj_[v].set(u);
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order();
    Graph g(na + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    a.loops().for_each([&](int v) { g.add_loop(v); });
    b.loops().for_each([&](int v) { g.add_loop(na + v); });
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

int count_isolates(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0 && !g.has_loop(v)) ++c;
    return c;
}

} // namespace homlex
