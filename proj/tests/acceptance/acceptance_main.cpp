// Acceptance suite: every criterion prints one PASS/FAIL line and the
// process exits nonzero if any fails. Run a single criterion with --only N.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "homlex/codes.hpp"
#include "homlex/extremal_verify.hpp"
#include "homlex/graph.hpp"
#include "homlex/hom.hpp"
#include "homlex/lex.hpp"
#include "homlex/lex_analysis.hpp"
#include "homlex/numbers.hpp"
#include "support/oracles.hpp"

using namespace homlex;
using homlex::testing::naive_ind;
using homlex::testing::random_graph;

namespace {

std::string g_detail;

bool fail(std::string detail) {
    g_detail = std::move(detail);
    return false;
}

const std::vector<EllRecord>& ell_table_to_10k() {
    static const std::vector<EllRecord> table = ell_range(1, 10000, EllWindow::Full);
    return table;
}

std::vector<LoopThresholdCode> loop_codes_up_to(int max_order) {
    std::vector<LoopThresholdCode> out;
    for (int len = 1; len <= max_order; ++len)
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            LoopThresholdCode c;
            c.bits.resize(len);
            for (int i = 0; i < len; ++i) c.bits[i] = (mask >> i) & 1;
            out.push_back(std::move(c));
        }
    return out;
}

// 1. lex_ind_closed == subset-enumeration i(L(n,m)), n <= 12
bool criterion_closed_form_vs_oracle() {
    for (int n = 1; n <= 12; ++n)
        for (std::int64_t m = 0; m <= pairs(n); ++m) {
            const BigCount closed = lex_ind_closed(lex_decompose(n, m));
            const BigCount oracle(static_cast<unsigned long>(naive_ind(lex_graph(n, m))));
            if (closed != oracle)
                return fail("mismatch at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
        }
    return true;
}

// 2. j_of_r == hom_count(L(q,m) u E_{n-q}, J), n <= 14
bool criterion_j_formula_vs_engine() {
    const Graph j = make_j();
    for (int n = 1; n <= 14; ++n) {
        if (j_of_r(RParams{n, 0, 0}) != hom_count(empty_graph(n), j))
            return fail("m=0 row differs at n=" + std::to_string(n));
        for (std::int64_t m = 1; m <= pairs(n); ++m)
            for (std::int64_t q = 2; q <= std::min<std::int64_t>(n, m + 1); ++q) {
                if (pairs(q) < m) continue;
                const RParams r{n, q, m};
                if (j_of_r(r) != hom_count(r_graph(r), j))
                    return fail("mismatch at n=" + std::to_string(n) +
                                " q=" + std::to_string(q) + " m=" + std::to_string(m));
            }
    }
    return true;
}

// 3. the lex graph is the unique maximizer of i(G) for n <= 6
bool criterion_lex_extremal() {
    for (int n = 1; n <= 6; ++n)
        for (std::int64_t m = 0; m <= pairs(n); ++m)
            if (!verify_lex_extremal(n, m).passed)
                return fail("failure at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
    return true;
}

// 4. per-size dominance of the lex profile for n <= 6
bool criterion_level_extremal() {
    for (int n = 1; n <= 6; ++n)
        for (std::int64_t m = 0; m <= pairs(n); ++m)
            if (!verify_level_extremal_all_t(n, m).passed)
                return fail("failure at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
    return true;
}

// 5. a threshold graph attains every class maximum, all images on <= 3 vertices
bool criterion_threshold_sufficiency() {
    for (const auto& code : loop_codes_up_to(3))
        for (int n = 1; n <= 6; ++n)
            for (std::int64_t m = 0; m <= pairs(n); ++m)
                if (!verify_threshold_sufficiency(n, m, code).passed)
                    return fail("failure for image " + code.display() + " at n=" +
                                std::to_string(n) + " m=" + std::to_string(m));
    return true;
}

// 6. every J-extremal threshold code decodes to an R(n,q,m), n <= 10
bool criterion_j_composition() {
    for (int n = 2; n <= 10; ++n)
        for (std::int64_t m = 1; m <= pairs(n); ++m)
            if (!verify_j_composition(n, m).passed)
                return fail("failure at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
    return true;
}

// 7. integer-form bound checks for every m <= 10^4
bool criterion_ell_bounds() {
    for (const EllRecord& r : ell_table_to_10k()) {
        if (!r.lower_ok || !r.upper_ok)
            return fail("bound violated at m=" + std::to_string(r.m));
        if (r.ell < r.lower - 2 || r.ell > r.upper + 2)
            return fail("maximizer escapes the banded window at m=" +
                        std::to_string(r.m));
    }
    return true;
}

// 8. stability: the maximizer stays at ell(m) for n up to ell(m)+50, m <= 200
bool criterion_stability() {
    for (std::int64_t m = 1; m <= 200; ++m) {
        const std::int64_t l = ell_table_to_10k()[m - 1].ell;
        if (!stability_check(m, l + 50))
            return fail("stability fails at m=" + std::to_string(m));
    }
    return true;
}

// 9. the n=50 sweep is non-monotone in the lex component size
bool criterion_sweep_nonmonotone() {
    const auto rows = sweep(50, 1, pairs(50));
    bool up = false, down = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].q_star_max > rows[i - 1].q_star_max) up = true;
        if (rows[i].q_star_max < rows[i - 1].q_star_max) down = true;
    }
    if (!up) return fail("no strict increase in q*");
    if (!down) return fail("no strict decrease in q*");
    return true;
}

// 10. median of ell(m)/sqrt(m) over m in [10^3, 10^4] within [1.6, 2.0]
bool criterion_empirical_ratio() {
    std::vector<double> ratios;
    for (const EllRecord& r : ell_table_to_10k())
        if (r.m >= 1000) ratios.push_back(r.ratio);
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    const double median = ratios[ratios.size() / 2];
    char buf[64];
    std::snprintf(buf, sizeof buf, "median %.4f", median);
    g_detail = buf;
    return median >= 1.6 && median <= 2.0;
}

// 11. every asserted sign in the removal-argument ledger holds for n <= 60
bool criterion_subcase_ledger() {
    std::uint64_t asserted = 0;
    for (const LedgerRow& row : subcase_ledger_all(60)) {
        if (row.status == LedgerStatus::Violated)
            return fail("sign violated at n=" + std::to_string(row.n) +
                        " k=" + std::to_string(row.k) + " w=" + std::to_string(row.w));
        if (row.status == LedgerStatus::Ok) ++asserted;
    }
    if (asserted == 0) return fail("no instances asserted");
    g_detail = std::to_string(asserted) + " instances";
    return true;
}

// 12. engine cross-checks: DP vs backtracking, closed forms, S° identity
bool criterion_engine_cross_checks() {
    const auto images = loop_codes_up_to(4);
    for (int len = 0; len <= 8; ++len)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            ThresholdCode code;
            code.bits.resize(len);
            for (int i = 0; i < len; ++i) code.bits[i] = (mask >> i) & 1;
            const Graph g = decode_threshold(code);
            for (const auto& img : images) {
                const Graph h = decode_loop_threshold(img);
                if (hom_count_threshold(code, h) != hom_count(g, h))
                    return fail("DP mismatch: code " + code.display() + " image " +
                                img.display());
            }
        }

    std::mt19937 rng(0xC0FFEE);
    const char* patterns[] = {"0",    "00",  "000", "0000", "1",    "11",  "111",
                              "1111", "01",  "011", "0111", "001",  "0011", "0001"};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 7;
        const Graph g = random_graph(rng, n, 0.5);
        for (const char* p : patterns) {
            const auto code = LoopThresholdCode::from_display(p);
            if (hom_closed_forms(g, code) != hom_count(g, decode_loop_threshold(code)))
                return fail("closed-form mismatch on pattern " + std::string{p});
        }
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q)
                if (!s_circ_identity_check(g, p, q))
                    return fail("S°(p,q) identity fails at p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    }
    return true;
}

struct Criterion {
    const char* title;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {"closed-form i(L(n,m)) vs subset enumeration, n<=12", criterion_closed_form_vs_oracle},
    {"j(R(n,q,m)) formula vs counting engine, n<=14", criterion_j_formula_vs_engine},
    {"lex graph uniquely maximizes i(G), n<=6", criterion_lex_extremal},
    {"lex profile dominates every i_t, n<=6", criterion_level_extremal},
    {"threshold graphs attain all <=3-vertex image maxima, n<=6", criterion_threshold_sufficiency},
    {"J-extremal threshold graphs are lex plus isolates, n<=10", criterion_j_composition},
    {"ell(m) bound brackets hold for m<=10^4", criterion_ell_bounds},
    {"maximizer stability in n for m<=200", criterion_stability},
    {"n=50 sweep is non-monotone", criterion_sweep_nonmonotone},
    {"median ell(m)/sqrt(m) in [1.6,2.0] on [10^3,10^4]", criterion_empirical_ratio},
    {"removal-argument signs hold for n<=60", criterion_subcase_ledger},
    {"engine cross-checks: DP, closed forms, S° identity", criterion_engine_cross_checks},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);

    const int total = static_cast<int>(std::size(kCriteria));
    int failures = 0;
    for (int i = 0; i < total; ++i) {
        if (only != 0 && only != i + 1) continue;
        g_detail.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = kCriteria[i].run();
        } catch (const std::exception& e) {
            g_detail = std::string{"exception: "} + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%2d/%d] %s  %s (%.1fs)%s%s\n", i + 1, total,
                    ok ? "PASS" : "FAIL", kCriteria[i].title, secs,
                    g_detail.empty() ? "" : " -- ", g_detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
