#ifndef HOMLEX_LEX_ANALYSIS_HPP
#define HOMLEX_LEX_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "homlex/graph.hpp"
#include "homlex/lex.hpp"
#include "homlex/numbers.hpp"

namespace homlex {

/// i(L(n,k,w)) = 2^(n-k-1) + 2^(n-k-w-1) + k. The complete-graph shape
/// (k,w) = (n-1,0) falls out as n+1 without a special case.
BigCount lex_ind_closed(const LexParams& p);

/// R(n,q;m) = L(q,m) u E_{n-q}. Feasible when m >= 1, 2 <= q <= min(n, m+1)
/// and m <= C(q,2), or the degenerate (q,m) = (0,0). The q <= m+1 bound keeps
/// the lex part free of isolates, which the 3^(n-q) factorization needs.
struct RParams {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t m = 0;
};

bool r_feasible(const RParams& r);

/// Builds the graph R(n,q;m). Intended for desk-scale oracle checks.
Graph r_graph(const RParams& r);

/// j(R(n,q;m)) = 3^(n-q) * i(L(q,m)). Throws InfeasibleError.
BigCount j_of_r(const RParams& r);

struct QSetResult {
    std::vector<std::int64_t> q_set; // every maximizing q, ascending
    BigCount value;                  // the shared maximum of j
};

/// All q in the feasibility window maximizing j(R(n,q;m)), with the maximum.
/// Comparisons are exact: powers of 3 are cancelled before comparing, so the
/// working numbers stay at O(q) bits. m = 0 returns {0} with value 3^n.
QSetResult extremal_q_set(std::int64_t n, std::int64_t m);

/// Window policy for ell: the full feasibility window is scanned up to
/// kEllFullWindowLimit; beyond, the scan is restricted to the proven band
/// [lower-2, upper+2] around the two closed-form bounds.
enum class EllWindow { Auto, Full, Banded };

inline constexpr std::int64_t kEllFullWindowLimit = 10'000;

/// ell(m) with its exact integer-form bound brackets:
///   lower = min{ L : (2L-1)^2 >= 1+8m }   (= ceil((1+sqrt(1+8m))/2))
///   upper = max{ U : 2U <= 5 or (2U-5)^2 <= 9+24m }
/// ratio is reporting-only; no float enters any comparison.
struct EllRecord {
    std::int64_t m = 0;
    std::int64_t ell = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool lower_ok = false;
    bool upper_ok = false;
    double ratio = 0.0;
};

EllRecord ell(std::int64_t m, EllWindow window = EllWindow::Auto);

/// Integer-only check of both published bounds at m.
bool ell_bounds_check(std::int64_t m);

/// True iff for every n in [ell(m), n_max], ell(m) is a maximizer at (n,m)
/// and is the largest one.
bool stability_check(std::int64_t m, std::int64_t n_max);

struct SweepRecord {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t q_star_max = 0;
    std::int64_t q_tie_count = 0;
    BigCount j_value;
};

/// One record per m in [m_lo, m_hi]; rows are independent and may be
/// computed on several threads, output is sorted by m either way.
std::vector<SweepRecord> sweep(std::int64_t n, std::int64_t m_lo, std::int64_t m_hi,
                               int threads = 1);

std::vector<EllRecord> ell_range(std::int64_t m_lo, std::int64_t m_hi,
                                 EllWindow window = EllWindow::Auto, int threads = 1);

// CSV emission. Headers are part of the file format.
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRecord& r);
std::string ell_csv_header();
std::string ell_csv_row(const EllRecord& r);

/// The five inequality families in the removal argument bounding ell(m).
enum class Subcase { S1a, S1b, S1c, S2a, S2b };

std::string subcase_name(Subcase s);

enum class LedgerStatus { Ok, Violated, Skipped };

/// One evaluated instance of the removal argument at shape (n,k,w):
/// G = L(n,k,w), G' = L(n-1,m) u E_1, G'' = L(n-2,m) u E_2, with
/// delta_prime = j(G') - j(G) and delta_double_prime = j(G'') - j(G)
/// (the latter only for the subcases that compare against G'').
/// Expected signs: 1a/1c/2a delta_prime > 0; 1b/2b delta_prime < 0 and
/// delta_double_prime > 0.
struct LedgerRow {
    std::int64_t n = 0, k = 0, w = 0, m = 0;
    Subcase subcase = Subcase::S1a;
    LedgerStatus status = LedgerStatus::Skipped;
    bool has_double_prime = false;
    BigCount delta_prime;
    BigCount delta_double_prime;
    std::string note; // reason when skipped
};

/// Evaluates one (n,k,w). Instances whose proof side conditions fail
/// (n < 3k+3, k < 1, or an out-of-range lex shape) are reported as Skipped,
/// never asserted.
LedgerRow subcase_ledger(std::int64_t n, std::int64_t k, std::int64_t w);

/// Every feasible (n,k,w) with n <= n_max under the umbrella condition.
std::vector<LedgerRow> subcase_ledger_all(std::int64_t n_max);

std::string ledger_csv_header();
std::string ledger_csv_row(const LedgerRow& r);

} // namespace homlex

#endif
