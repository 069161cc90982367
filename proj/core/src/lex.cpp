#include "homlex/lex.hpp"

#include <cmath>

#include "homlex/errors.hpp"
#include "homlex/numbers.hpp"

namespace homlex {

namespace {

void check_edge_range(std::int64_t n, std::int64_t m) {
    if (n < 0) throw InfeasibleError("negative order");
    if (m < 0 || m > pairs(n))
        throw InfeasibleError("edge count " + std::to_string(m) +
                              " out of range for n=" + std::to_string(n));
}

} // namespace

Graph lex_graph(int n, std::int64_t m) {
    check_edge_range(n, m);
    Graph g(n);
    std::int64_t left = m;
    for (int u = 0; u < n && left > 0; ++u)
        for (int v = u + 1; v < n && left > 0; ++v, --left) g.add_edge(u, v);
    return g;
}

Graph colex_graph(int n, std::int64_t m) {
    check_edge_range(n, m);
    Graph g(n);
    std::int64_t left = m;
    for (int v = 1; v < n && left > 0; ++v)
        for (int u = 0; u < v && left > 0; ++u, --left) g.add_edge(u, v);
    return g;
}

LexParams lex_decompose(std::int64_t n, std::int64_t m) {
    if (n < 1) throw InfeasibleError("lex decomposition needs n >= 1");
    check_edge_range(n, m);
    if (m == pairs(n)) return LexParams{n, n - 1, 0, m};

    // k is the unique value with split_edges(n,k) <= m <= split_edges(n,k) +
    // n-k-2; the intervals over k tile [0, C(n,2)) exactly. Seed from the
    // quadratic root, then correct.
    const double disc = static_cast<double>((2 * n - 1) * (2 * n - 1) - 8 * m);
    std::int64_t k = static_cast<std::int64_t>(
        (static_cast<double>(2 * n - 1) - std::sqrt(disc < 0 ? 0.0 : disc)) / 2.0);
    if (k < 0) k = 0;
    if (k > n - 1) k = n - 1;
    while (k > 0 && split_edges(n, k) > m) --k;
    while (k < n - 1 && m > split_edges(n, k) + (n - k - 2)) ++k;
    const std::int64_t w = m - split_edges(n, k);
    return LexParams{n, k, w, m};
}

Graph split_graph(int n, int k) {
    if (k < 0 || k > n) throw InfeasibleError("split graph needs 0 <= k <= n");
    return join(complete_graph(k), empty_graph(n - k));
}

Graph clique_looped_split(int p, int q) {
    if (p < 0 || q < 0) throw InfeasibleError("S°(p,q) needs p,q >= 0");
    Graph g = join(complete_graph(p), empty_graph(q));
    for (int v = 0; v < p; ++v) g.add_loop(v);
    return g;
}

} // namespace homlex
