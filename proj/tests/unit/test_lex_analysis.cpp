#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "homlex/errors.hpp"
#include "homlex/extremal_verify.hpp"
#include "homlex/hom.hpp"
#include "homlex/lex.hpp"
#include "homlex/lex_analysis.hpp"
#include "homlex/numbers.hpp"
#include "support/oracles.hpp"

using namespace homlex;
using homlex::testing::naive_ind;

TEST_CASE("closed-form lex independent-set count") {
    for (int n = 1; n <= 10; ++n)
        CHECK(lex_ind_closed(LexParams{n, 0, 0, 0}) == big_pow2(n));
    CHECK(lex_ind_closed(LexParams{3, 1, 0, 2}) == 5);
    CHECK(lex_ind_closed(LexParams{5, 2, 1, 8}) == 8);
    CHECK(naive_ind(lex_graph(5, 8)) == 8);

    for (int n = 1; n <= 10; ++n)
        for (std::int64_t m = 0; m <= pairs(n); ++m)
            CHECK(lex_ind_closed(lex_decompose(n, m)) ==
                  BigCount(naive_ind(lex_graph(n, m))));

    CHECK_THROWS_AS(lex_ind_closed(LexParams{5, 1, 3, 7}), InfeasibleError);
    CHECK_THROWS_AS(lex_ind_closed(LexParams{5, 2, 1, 9}), InfeasibleError);
}

TEST_CASE("j_of_r spec instances and oracle agreement") {
    CHECK(j_of_r(RParams{3, 2, 1}) == 9);
    CHECK(hom_count(r_graph(RParams{3, 2, 1}), make_j()) == 9);
    CHECK(j_of_r(RParams{4, 3, 3}) == 12);
    for (int n = 2; n <= 8; ++n)
        for (std::int64_t m = 1; m <= pairs(n); ++m)
            CHECK(j_of_r(RParams{n, n, m}) == lex_ind_closed(lex_decompose(n, m)));

    CHECK_THROWS_AS(j_of_r(RParams{3, 3, 4}), InfeasibleError);  // m > C(q,2)
    CHECK_THROWS_AS(j_of_r(RParams{3, 4, 3}), InfeasibleError);  // q > n
    CHECK_THROWS_AS(j_of_r(RParams{9, 5, 3}), InfeasibleError);  // q > m+1
    CHECK_THROWS_AS(j_of_r(RParams{9, 1, 0}), InfeasibleError);  // lex part an isolate
    CHECK(j_of_r(RParams{4, 0, 0}) == 81);
}

TEST_CASE("j_of_r equals the counting engine over the window") {
    for (int n = 1; n <= 9; ++n)
        for (std::int64_t m = 1; m <= pairs(n); ++m)
            for (std::int64_t q = 2; q <= std::min<std::int64_t>(n, m + 1); ++q) {
                if (pairs(q) < m) continue;
                const RParams r{n, q, m};
                CHECK(j_of_r(r) == hom_count(r_graph(r), make_j()));
            }
}

TEST_CASE("extremal_q_set spec instances") {
    const QSetResult a = extremal_q_set(3, 2);
    CHECK(a.q_set == std::vector<std::int64_t>{3});
    CHECK(a.value == 5);

    const QSetResult b = extremal_q_set(4, 3);
    CHECK(b.q_set == std::vector<std::int64_t>{3});
    CHECK(b.value == 12);

    const QSetResult c = extremal_q_set(2, 1);
    CHECK(c.q_set == std::vector<std::int64_t>{2});
    CHECK(c.value == 3);

    const QSetResult zero = extremal_q_set(5, 0);
    CHECK(zero.q_set == std::vector<std::int64_t>{0});
    CHECK(zero.value == 243);

    CHECK_THROWS_AS(extremal_q_set(3, 4), InfeasibleError);
}

TEST_CASE("every q in the set attains the shared maximum") {
    for (int n = 2; n <= 12; ++n)
        for (std::int64_t m = 1; m <= pairs(n); ++m) {
            const QSetResult r = extremal_q_set(n, m);
            REQUIRE(!r.q_set.empty());
            CHECK(std::is_sorted(r.q_set.begin(), r.q_set.end()));
            for (std::int64_t q : r.q_set)
                CHECK(j_of_r(RParams{n, q, m}) == r.value);
            // no feasible q beats it
            for (std::int64_t q = 2; q <= std::min<std::int64_t>(n, m + 1); ++q) {
                if (pairs(q) < m) continue;
                CHECK(j_of_r(RParams{n, q, m}) <= r.value);
            }
        }
}

TEST_CASE("ell spec instances and bound brackets") {
    CHECK(ell(1).ell == 2);
    CHECK(ell(2).ell == 3);
    CHECK(ell(3).ell == 3);
    CHECK(ell(4).ell == 4);
    CHECK(ell(3).lower == 3);
    CHECK(ell(3).upper == 7); // floor((5+sqrt(9+72))/2)
    CHECK(ell(1).upper == 5); // floor((5+sqrt(33))/2)
    CHECK(ell(3).ratio == doctest::Approx(1.7320508).epsilon(1e-6));
    CHECK_THROWS_AS(ell(0), InfeasibleError);

    for (std::int64_t m = 1; m <= 2000; ++m) CHECK(ell_bounds_check(m));
}

TEST_CASE("banded window reproduces the full-window ell") {
    for (std::int64_t m : {1, 2, 3, 7, 50, 100, 777, 3000}) {
        const EllRecord full = ell(m, EllWindow::Full);
        const EllRecord band = ell(m, EllWindow::Banded);
        CHECK(full.ell == band.ell);
    }
}

TEST_CASE("stability of the maximizer in n") {
    CHECK(stability_check(3, 10));
    CHECK(stability_check(1, 5));
    CHECK(stability_check(4, 8));
    for (std::int64_t m = 1; m <= 60; ++m) CHECK(stability_check(m, ell(m).ell + 20));
}

TEST_CASE("argmax set is n-invariant above the window top") {
    for (std::int64_t m = 1; m <= 40; ++m)
        CHECK(extremal_q_set(m + 1, m).q_set == extremal_q_set(m + 30, m).q_set);
}

TEST_CASE("sweep rows at n=4 match the hand-derived q sequence") {
    const auto rows = sweep(4, 1, 6);
    REQUIRE(rows.size() == 6);
    const std::int64_t expect_q[] = {2, 3, 3, 4, 4, 4};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].m == static_cast<std::int64_t>(i + 1));
        CHECK(rows[i].q_star_max == expect_q[i]);
        CHECK(rows[i].q_tie_count == 1);
    }
    CHECK(rows[0].j_value == 27);
    CHECK(rows[5].j_value == 5);

    const auto single = sweep(2, 1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].q_star_max == 2);

    CHECK_THROWS_AS(sweep(4, 0, 3), InfeasibleError);
    CHECK_THROWS_AS(sweep(4, 1, 7), InfeasibleError);
}

TEST_CASE("sweep is deterministic across thread counts") {
    const auto serial = sweep(20, 1, pairs(20), 1);
    const auto threaded = sweep(20, 1, pairs(20), 4);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].q_star_max == threaded[i].q_star_max);
        CHECK(serial[i].j_value == threaded[i].j_value);
    }
    const auto ell_serial = ell_range(1, 200);
    const auto ell_threaded = ell_range(1, 200, EllWindow::Auto, 3);
    for (std::size_t i = 0; i < ell_serial.size(); ++i)
        CHECK(ell_serial[i].ell == ell_threaded[i].ell);
}

TEST_CASE("csv formats") {
    CHECK(sweep_csv_header() == "n,m,q_star_max,q_tie_count,j_value");
    CHECK(ell_csv_header() == "m,ell,lower_ok,upper_ok,ratio");
    const auto rows = sweep(4, 3, 3);
    CHECK(sweep_csv_row(rows[0]) == "4,3,3,1,12");
    CHECK(ell_csv_row(ell(3)) == "3,3,true,true,1.732051");
    CHECK(ledger_csv_header() == "n,k,w,m,subcase,delta_prime,delta_double_prime,status");
}

TEST_CASE("subcase ledger spec instances") {
    const LedgerRow c1 = subcase_ledger(8, 1, 0);
    CHECK(c1.subcase == Subcase::S1c);
    CHECK(c1.status == LedgerStatus::Ok);
    CHECK(c1.delta_prime == 18); // 2^(n-4) + 2 at n = 8

    const LedgerRow a1 = subcase_ledger(12, 2, 1);
    CHECK(a1.subcase == Subcase::S1a);
    CHECK(a1.status == LedgerStatus::Ok);
    CHECK(a1.delta_prime == 100); // 2^(n-2k-w-2) (2^(k+w)+3-2^(k+1)) + 2k

    const LedgerRow b = subcase_ledger(9, 2, 0);
    CHECK(b.subcase == Subcase::S1b);
    CHECK(b.status == LedgerStatus::Ok);
    CHECK(b.delta_prime < 0);
    CHECK(b.delta_double_prime > 0);

    const LedgerRow skipped = subcase_ledger(8, 2, 0); // n < 3k+3
    CHECK(skipped.status == LedgerStatus::Skipped);

    const LedgerRow bad_shape = subcase_ledger(8, 1, 7);
    CHECK(bad_shape.status == LedgerStatus::Skipped);
}

TEST_CASE("subcase classification covers the shape space under the umbrella") {
    int counts[5] = {0, 0, 0, 0, 0};
    for (const auto& row : subcase_ledger_all(40)) {
        if (row.status == LedgerStatus::Skipped) continue;
        CHECK(row.status == LedgerStatus::Ok);
        ++counts[static_cast<int>(row.subcase)];
        // classification matches the paper's conditions
        const auto [n, k, w] = std::tuple{row.n, row.k, row.w};
        switch (row.subcase) {
            case Subcase::S1a: CHECK((w >= 1 && w <= n - 2 * k - 3)); break;
            case Subcase::S1b: CHECK((w == 0 && k >= 2)); break;
            case Subcase::S1c: CHECK((w == 0 && k == 1)); break;
            case Subcase::S2a: CHECK((w == n - 2 * k - 2 || w == n - 2 * k - 1)); break;
            case Subcase::S2b: CHECK(w >= n - 2 * k); break;
        }
    }
    for (int c : counts) CHECK(c > 0); // every subcase exercised
}

TEST_CASE("predicted reduced shapes match the actual decompositions") {
    for (const auto& row : subcase_ledger_all(30)) {
        if (row.status == LedgerStatus::Skipped) continue;
        const auto [n, k, w, m] = std::tuple{row.n, row.k, row.w, row.m};
        const LexParams p1 = lex_decompose(n - 1, m);
        switch (row.subcase) {
            case Subcase::S1a:
                CHECK(p1.k == k);
                CHECK(p1.w == w + k);
                break;
            case Subcase::S1b: {
                CHECK(p1.k == k);
                CHECK(p1.w == k);
                const LexParams p2 = lex_decompose(n - 2, m);
                // w'' = 2k, normalized to (k+1, 0) when it fills the empty part
                if (2 * k <= n - k - 4) {
                    CHECK(p2.k == k);
                    CHECK(p2.w == 2 * k);
                } else {
                    CHECK(p2.k == k + 1);
                    CHECK(p2.w == 0);
                }
                break;
            }
            case Subcase::S1c:
                CHECK(p1.k == 1);
                CHECK(p1.w == 1);
                break;
            case Subcase::S2a:
                CHECK(p1.k == k + 1);
                CHECK(p1.w == w + 2 * k - n + 2);
                break;
            case Subcase::S2b:
                CHECK(p1.k == k + 1);
                CHECK(p1.w == w + 2 * k - n + 2);
                break;
        }
    }
}
