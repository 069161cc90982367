#include "homlex/hom.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "homlex/errors.hpp"
#include "homlex/lex.hpp"

namespace homlex {

namespace {

struct SearchPlan {
    int ns = 0;
    int nh = 0;
    std::uint64_t full = 0;
    std::uint64_t loop_mask = 0;
    std::vector<std::uint64_t> img_adj;           // self bit set iff looped
    std::vector<std::vector<int>> earlier;        // per position
    std::vector<bool> looped;                     // per position
};

SearchPlan make_plan(const Graph& g, const Graph& h) {
    SearchPlan plan;
    plan.ns = g.order();
    plan.nh = h.order();
    if (plan.nh > 62)
        throw InstanceTooLargeError("image graphs above 62 vertices unsupported");
    plan.full = plan.nh == 0 ? 0 : ((std::uint64_t{1} << plan.nh) - 1);
    plan.img_adj.assign(plan.nh, 0);
    for (int x = 0; x < plan.nh; ++x) {
        h.neighbors(x).for_each(
            [&](int y) { plan.img_adj[x] |= std::uint64_t{1} << y; });
        if (h.has_loop(x)) {
            plan.img_adj[x] |= std::uint64_t{1} << x;
            plan.loop_mask |= std::uint64_t{1} << x;
        }
    }

    // Fixed assignment order: descending degree, index as tie-break. Isolated
    // source vertices end up last, where the leaf popcount absorbs them.
    std::vector<int> order(plan.ns);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> pos(plan.ns);
    for (int p = 0; p < plan.ns; ++p) pos[order[p]] = p;

    plan.earlier.resize(plan.ns);
    plan.looped.resize(plan.ns);
    for (int p = 0; p < plan.ns; ++p) {
        const int v = order[p];
        plan.looped[p] = g.has_loop(v);
        g.neighbors(v).for_each([&](int u) {
            if (pos[u] < p) plan.earlier[p].push_back(pos[u]);
        });
    }
    return plan;
}

struct NodeBudget {
    std::uint64_t left;

    void spend() {
        if (left == 0)
            throw InstanceTooLargeError("node-visit budget exhausted");
        --left;
    }
};

template <typename Count>
Count hom_rec(const SearchPlan& plan, std::vector<int>& assign, int p,
              NodeBudget& budget) {
    budget.spend();
    std::uint64_t mask = plan.full;
    for (int q : plan.earlier[p]) mask &= plan.img_adj[assign[q]];
    if (plan.looped[p]) mask &= plan.loop_mask;
    if (p + 1 == plan.ns) return Count(std::popcount(mask));
    Count total = 0;
    while (mask) {
        const int x = std::countr_zero(mask);
        mask &= mask - 1;
        assign[p] = x;
        total += hom_rec<Count>(plan, assign, p + 1, budget);
    }
    return total;
}

bool fits_u64(int base, int exp) {
    // true iff base^exp < 2^63
    if (base <= 1) return true;
    long double v = 1.0L;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v >= 9.2e18L) return false;
    }
    return true;
}

} // namespace

BigCount hom_count(const Graph& g, const Graph& h, const HomLimits& limits) {
    const SearchPlan plan = make_plan(g, h);
    if (plan.ns == 0) return 1;
    NodeBudget budget{limits.max_nodes};
    std::vector<int> assign(plan.ns, -1);
    if (fits_u64(plan.nh, plan.ns))
        return BigCount(hom_rec<std::uint64_t>(plan, assign, 0, budget));
    return hom_rec<BigCount>(plan, assign, 0, budget);
}

namespace {

template <typename Count>
Count threshold_dp(const ThresholdCode& code, const std::vector<std::uint64_t>& adj,
                   int nh) {
    const std::size_t states = std::size_t{1} << nh;
    // f[S] = homs of the processed prefix with every image inside S.
    std::vector<Count> f(states, Count(1));
    // the uncoded first vertex is an isolated step
    for (std::size_t s = 0; s < states; ++s)
        f[s] *= Count(std::popcount(static_cast<std::uint64_t>(s)));
    std::vector<Count> next(states, Count(0));
    for (std::uint8_t bit : code.bits) {
        if (!bit) {
            for (std::size_t s = 0; s < states; ++s)
                f[s] *= Count(std::popcount(static_cast<std::uint64_t>(s)));
            continue;
        }
        for (std::size_t s = 0; s < states; ++s) {
            Count acc = 0;
            std::uint64_t rest = s;
            while (rest) {
                const int x = std::countr_zero(rest);
                rest &= rest - 1;
                acc += f[s & adj[x]];
            }
            next[s] = acc;
        }
        f.swap(next);
    }
    return f[states - 1];
}

} // namespace

BigCount hom_count_threshold(const ThresholdCode& code, const Graph& h,
                             const HomLimits& limits) {
    const int nh = h.order();
    if (nh > 20)
        throw InstanceTooLargeError("subset-state DP limited to images on <= 20 vertices");
    const int n = code.order();
    const std::uint64_t work = static_cast<std::uint64_t>(n) *
                               (std::uint64_t{1} << nh) *
                               static_cast<std::uint64_t>(std::max(nh, 1));
    if (work > limits.max_nodes)
        throw InstanceTooLargeError("subset-state DP over budget");
    std::vector<std::uint64_t> adj(nh, 0);
    for (int x = 0; x < nh; ++x) {
        h.neighbors(x).for_each([&](int y) { adj[x] |= std::uint64_t{1} << y; });
        if (h.has_loop(x)) adj[x] |= std::uint64_t{1} << x;
    }
    if (fits_u64(nh, n)) return BigCount(threshold_dp<std::uint64_t>(code, adj, nh));
    return threshold_dp<BigCount>(code, adj, nh);
}

BigCount ind_count(const Graph& g, const HomLimits& limits) {
    if (!g.loop_free())
        throw InfeasibleError("independent-set counting needs a loop-free graph");
    return hom_count(g, make_h_ind(), limits);
}

BigCount IndProfile::total() const {
    BigCount t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

namespace {

void profile_rec(const Graph& g, int v, int size, std::vector<int>& blocked,
                 std::vector<std::uint64_t>& counts, NodeBudget& budget) {
    budget.spend();
    if (v == g.order()) {
        ++counts[size];
        return;
    }
    profile_rec(g, v + 1, size, blocked, counts, budget);
    if (blocked[v] == 0) {
        g.neighbors(v).for_each([&](int u) { ++blocked[u]; });
        profile_rec(g, v + 1, size + 1, blocked, counts, budget);
        g.neighbors(v).for_each([&](int u) { --blocked[u]; });
    }
}

} // namespace

IndProfile ind_profile(const Graph& g, const HomLimits& limits) {
    if (!g.loop_free())
        throw InfeasibleError("independent-set profiles need a loop-free graph");
    const int n = g.order();
    if (n > 62) throw InstanceTooLargeError("profile enumeration limited to n <= 62");
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<int> blocked(n, 0);
    NodeBudget budget{limits.max_nodes};
    profile_rec(g, 0, 0, blocked, counts, budget);
    IndProfile out;
    out.counts.reserve(counts.size());
    for (auto c : counts) out.counts.emplace_back(static_cast<unsigned long>(c));
    return out;
}

Weighting::Weighting(std::vector<Rational> weights) : w_(std::move(weights)) {
    for (const auto& x : w_)
        if (x < 0) throw InfeasibleError("weights must be nonnegative");
}

Weighting Weighting::uniform(int n) {
    return Weighting(std::vector<Rational>(n, Rational(1)));
}

Weighting Weighting::beta_lambda(const Rational& lambda) {
    return Weighting({lambda, Rational(1)});
}

namespace {

Rational partition_rec(const SearchPlan& plan, const Weighting& beta,
                       std::vector<int>& assign, int p, NodeBudget& budget) {
    budget.spend();
    std::uint64_t mask = plan.full;
    for (int q : plan.earlier[p]) mask &= plan.img_adj[assign[q]];
    if (plan.looped[p]) mask &= plan.loop_mask;
    Rational total(0);
    while (mask) {
        const int x = std::countr_zero(mask);
        mask &= mask - 1;
        if (p + 1 == plan.ns) {
            total += beta[x];
        } else {
            assign[p] = x;
            total += beta[x] * partition_rec(plan, beta, assign, p + 1, budget);
        }
    }
    return total;
}

} // namespace

Rational partition_function(const Graph& g, const Graph& h, const Weighting& beta,
                            const HomLimits& limits) {
    if (beta.size() != h.order())
        throw InfeasibleError("weighting size must match the image order");
    const SearchPlan plan = make_plan(g, h);
    if (plan.ns == 0) return Rational(1);
    NodeBudget budget{limits.max_nodes};
    std::vector<int> assign(plan.ns, -1);
    return partition_rec(plan, beta, assign, 0, budget);
}

Rational independence_poly_eval(const Graph& g, const Rational& lambda,
                                const HomLimits& limits) {
    const IndProfile prof = ind_profile(g, limits);
    Rational acc(0);
    for (auto it = prof.counts.rbegin(); it != prof.counts.rend(); ++it)
        acc = acc * lambda + Rational(*it);
    return acc;
}

BigCount hom_closed_forms(const Graph& g, const LoopThresholdCode& image) {
    if (!g.loop_free())
        throw InfeasibleError("closed forms assume a loop-free source");
    const std::string s = image.display();
    if (s.empty()) throw PatternUnsupportedError("empty image code");
    const std::int64_t n = g.order();
    const auto ones = static_cast<std::int64_t>(std::count(s.begin(), s.end(), '1'));
    const auto zeros = static_cast<std::int64_t>(s.size()) - ones;
    if (ones == 0) {
        // 0^q: only edgeless sources map anywhere
        return g.edge_count() > 0 ? BigCount(0) : big_pow(zeros, n);
    }
    if (zeros == 0) return big_pow(ones, n); // 1^p
    // 0^q 1^p in display order: zeros first, ones last
    const bool zeros_then_ones =
        s.find('1') == static_cast<std::size_t>(zeros);
    if (!zeros_then_ones)
        throw PatternUnsupportedError("no closed form for image code " + s);
    const std::int64_t c = count_isolates(g);
    return big_pow(ones + zeros, c) * big_pow(ones, n - c);
}

bool s_circ_identity_check(const Graph& g, int p, int q, const HomLimits& limits) {
    if (p < 1 || q < 1) throw InfeasibleError("S°(p,q) check needs p,q >= 1");
    if (!g.loop_free()) throw InfeasibleError("source must be loop-free");
    const BigCount lhs = hom_count(g, clique_looped_split(p, q), limits);
    const IndProfile prof = ind_profile(g, limits);
    const std::int64_t n = g.order();
    // The preimage of the q unlooped vertices is an independent set, so size-t
    // sets carry weight q^t: hom(G, S°(p,q)) = p^n P_G(q/p).
    BigCount rhs = 0;
    for (std::int64_t t = 0; t <= n; ++t)
        rhs += prof.counts[t] * big_pow(q, t) * big_pow(p, n - t);
    return lhs == rhs;
}

} // namespace homlex
