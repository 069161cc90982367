#include "homlex/extremal_verify.hpp"

#include <algorithm>
#include <set>

#include "homlex/errors.hpp"
#include "homlex/lex.hpp"
#include "homlex/lex_analysis.hpp"

namespace homlex {

namespace {

std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(static_cast<std::size_t>(pairs(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ps.emplace_back(u, v);
    return ps;
}

BigCount labeled_class_size(int n, std::int64_t m) {
    BigCount c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(pairs(n)),
                 static_cast<unsigned long>(m));
    return c;
}

template <typename Sink>
void for_each_labeled(int n, std::int64_t m, std::uint64_t cap, Sink&& sink) {
    if (m < 0 || m > pairs(n)) throw InfeasibleError("edge count out of range");
    if (labeled_class_size(n, m) > BigCount(static_cast<unsigned long>(cap)))
        throw InstanceTooLargeError("labeled class larger than the workload cap");
    const auto ps = pair_list(n);
    const int p = static_cast<int>(ps.size());
    const int k = static_cast<int>(m);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Graph g(n);
        for (int i : idx) g.add_edge(ps[i].first, ps[i].second);
        sink(g);
        int i = k - 1;
        while (i >= 0 && idx[i] == p - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

void enumerate_threshold_codes(int n, std::int64_t m,
                               const std::function<void(const ThresholdCode&)>& sink) {
    if (n < 1) throw InfeasibleError("threshold codes need n >= 1");
    if (n > 30) throw InstanceTooLargeError("2^(n-1) codes is over budget");
    const int len = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        ThresholdCode code;
        code.bits.resize(len);
        for (int i = 0; i < len; ++i) code.bits[i] = (mask >> i) & 1;
        if (code.edge_count() == m) sink(code);
    }
}

void enumerate_graphs(const GraphClassSpec& spec,
                      const std::function<void(const Graph&)>& sink) {
    switch (spec.cls) {
        case GraphClass::AllLabeled:
            for_each_labeled(spec.n, spec.m, spec.labeled_cap, sink);
            return;
        case GraphClass::UpToIso: {
            if (spec.n > spec.iso_n_cap)
                throw InstanceTooLargeError("up-to-iso enumeration over the order cap");
            std::set<std::uint64_t> seen;
            for_each_labeled(spec.n, spec.m, spec.labeled_cap, [&](const Graph& g) {
                if (seen.insert(canonical_form(g).bits).second) sink(g);
            });
            return;
        }
        case GraphClass::ThresholdCodes:
            enumerate_threshold_codes(spec.n, spec.m, [&](const ThresholdCode& c) {
                sink(decode_threshold(c));
            });
            return;
    }
}

namespace {

// Branch-and-bound minimal adjacency string. Pair columns extend the string
// one chosen vertex at a time, so a partial permutation owns a prefix and
// prunes against the incumbent.
struct Canonicalizer {
    int n;
    int total_bits;
    std::vector<std::uint16_t> adj;
    std::vector<int> perm;
    std::vector<bool> used;
    std::uint64_t best = ~std::uint64_t{0};

    explicit Canonicalizer(const Graph& g)
        : n(g.order()), total_bits(static_cast<int>(pairs(n))), adj(n, 0),
          perm(n, -1), used(n, false) {
        for (int v = 0; v < n; ++v)
            g.neighbors(v).for_each(
                [&](int u) { adj[v] |= static_cast<std::uint16_t>(1u << u); });
    }

    std::uint64_t run() {
        if (n <= 1) return 0;
        // identity incumbent
        std::uint64_t key = 0;
        for (int t = 1; t < n; ++t)
            for (int s = 0; s < t; ++s) key = (key << 1) | ((adj[t] >> s) & 1u);
        best = key;
        dfs(0, 0, 0);
        return best;
    }

    void dfs(int t, std::uint64_t prefix, int bits) {
        if (t == n) {
            if (prefix < best) best = prefix;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t next = prefix;
            for (int s = 0; s < t; ++s)
                next = (next << 1) | ((adj[v] >> perm[s]) & 1u);
            const int nbits = bits + t;
            if (next > (best >> (total_bits - nbits))) continue;
            perm[t] = v;
            used[v] = true;
            dfs(t + 1, next, nbits);
            used[v] = false;
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (!g.loop_free())
        throw InfeasibleError("canonical forms are defined for loop-free graphs");
    if (g.order() > 11)
        throw InstanceTooLargeError("canonicalization limited to n <= 11");
    Canonicalizer c(g);
    return CanonicalForm{g.order(), c.run()};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

ExtremalReport max_hom_over_class(const GraphClassSpec& spec, const Graph& h,
                                  const ExtremalOptions& opts) {
    ExtremalReport rep;
    rep.max_value = -1;
    auto consider = [&](const Graph& g, const BigCount& value) {
        ++rep.enumerated;
        const int c = cmp(value, rep.max_value);
        if (c < 0) return;
        if (c > 0) {
            rep.max_value = value;
            rep.witnesses.clear();
            rep.witness_forms.clear();
            rep.witness_overflow = false;
        }
        const CanonicalForm form = canonical_form(g);
        if (std::find(rep.witness_forms.begin(), rep.witness_forms.end(), form) !=
            rep.witness_forms.end())
            return;
        if (rep.witness_forms.size() >= opts.witness_cap) {
            rep.witness_overflow = true;
            return;
        }
        rep.witness_forms.push_back(form);
        rep.witnesses.push_back(g);
    };

    if (spec.cls == GraphClass::ThresholdCodes) {
        enumerate_threshold_codes(spec.n, spec.m, [&](const ThresholdCode& code) {
            const BigCount v = h.order() <= 20
                                   ? hom_count_threshold(code, h, opts.limits)
                                   : hom_count(decode_threshold(code), h, opts.limits);
            consider(decode_threshold(code), v);
        });
    } else {
        enumerate_graphs(spec, [&](const Graph& g) {
            consider(g, hom_count(g, h, opts.limits));
        });
    }
    if (rep.enumerated == 0) throw InfeasibleError("empty graph class");
    return rep;
}

VerifyOutcome verify_lex_extremal(int n, std::int64_t m) {
    const ExtremalReport rep =
        max_hom_over_class({.n = n, .m = m, .cls = GraphClass::AllLabeled}, make_h_ind());
    if (rep.witness_overflow)
        throw WitnessOverflowError("witness cap hit; uniqueness undecidable");
    const CanonicalForm lex_form = canonical_form(lex_graph(n, m));

    VerifyOutcome out;
    if (rep.witness_forms.size() != 1 || rep.witness_forms[0] != lex_form) {
        out.passed = false;
        for (std::size_t i = 0; i < rep.witness_forms.size(); ++i)
            if (rep.witness_forms[i] != lex_form) {
                out.counterexample = rep.witnesses[i];
                break;
            }
        out.detail = "maximum not attained uniquely by the lex graph";
    }
    return out;
}

namespace {

VerifyOutcome verify_level_range(int n, std::int64_t m, int t_lo, int t_hi) {
    const IndProfile lex_prof = ind_profile(lex_graph(n, m));
    VerifyOutcome out;
    enumerate_graphs({.n = n, .m = m, .cls = GraphClass::AllLabeled}, [&](const Graph& g) {
        if (!out.passed) return;
        const IndProfile prof = ind_profile(g);
        for (int t = t_lo; t <= t_hi; ++t)
            if (prof.counts[t] > lex_prof.counts[t]) {
                out.passed = false;
                out.counterexample = g;
                out.detail = "i_" + std::to_string(t) + " exceeds the lex profile";
                return;
            }
    });
    return out;
}

Rational horner(const IndProfile& prof, const Rational& lambda) {
    Rational acc(0);
    for (auto it = prof.counts.rbegin(); it != prof.counts.rend(); ++it)
        acc = acc * lambda + Rational(*it);
    return acc;
}

} // namespace

VerifyOutcome verify_level_extremal(int n, std::int64_t m, int t) {
    if (t < 0 || t > n) throw InfeasibleError("level t out of range");
    return verify_level_range(n, m, t, t);
}

VerifyOutcome verify_level_extremal_all_t(int n, std::int64_t m) {
    return verify_level_range(n, m, 0, n);
}

VerifyOutcome verify_wtd_extremal(int n, std::int64_t m,
                                  const std::vector<Rational>& lambda_grid) {
    const IndProfile lex_prof = ind_profile(lex_graph(n, m));
    std::vector<Rational> lex_values;
    lex_values.reserve(lambda_grid.size());
    for (const auto& lam : lambda_grid) lex_values.push_back(horner(lex_prof, lam));

    VerifyOutcome out;
    enumerate_graphs({.n = n, .m = m, .cls = GraphClass::AllLabeled}, [&](const Graph& g) {
        if (!out.passed) return;
        const IndProfile prof = ind_profile(g);
        for (std::size_t i = 0; i < lambda_grid.size(); ++i)
            if (horner(prof, lambda_grid[i]) > lex_values[i]) {
                out.passed = false;
                out.counterexample = g;
                out.detail = "P_G(" + to_decimal(lambda_grid[i]) +
                             ") exceeds the lex polynomial";
                return;
            }
    });
    return out;
}

VerifyOutcome verify_threshold_sufficiency(int n, std::int64_t m,
                                           const LoopThresholdCode& h_code) {
    const Graph h = decode_loop_threshold(h_code);
    const ExtremalReport all =
        max_hom_over_class({.n = n, .m = m, .cls = GraphClass::AllLabeled}, h);
    const ExtremalReport thr =
        max_hom_over_class({.n = n, .m = m, .cls = GraphClass::ThresholdCodes}, h);

    VerifyOutcome out;
    if (all.max_value != thr.max_value) {
        out.passed = false;
        if (!all.witnesses.empty()) out.counterexample = all.witnesses.front();
        out.detail = "threshold maximum " + to_decimal(thr.max_value) +
                     " below class maximum " + to_decimal(all.max_value) +
                     " for image " + h_code.display();
    }
    return out;
}

VerifyOutcome verify_j_composition(int n, std::int64_t m) {
    VerifyOutcome out;
    if (m == 0) return out; // E_n is the single threshold graph
    const ExtremalReport thr =
        max_hom_over_class({.n = n, .m = m, .cls = GraphClass::ThresholdCodes}, make_j());

    // Threshold codes are canonical, so membership in the R family is a code
    // comparison against every feasible lex-component order.
    std::vector<ThresholdCode> family;
    for (std::int64_t q = 2; q <= std::min<std::int64_t>(n, m + 1); ++q) {
        if (pairs(q) < m) continue;
        ThresholdCode code = encode_threshold(lex_graph(static_cast<int>(q), m));
        code.bits.resize(static_cast<std::size_t>(n - 1), 0); // append isolates
        family.push_back(std::move(code));
    }
    for (const auto& witness : thr.witnesses) {
        const ThresholdCode code = encode_threshold(witness);
        if (std::find(family.begin(), family.end(), code) == family.end()) {
            out.passed = false;
            out.counterexample = witness;
            out.detail = "J-extremal threshold code " + code.display() +
                         " is not of the form R(n,q;m)";
            return out;
        }
    }
    return out;
}

} // namespace homlex
