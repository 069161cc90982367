#include "homlex/lex_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "homlex/errors.hpp"

namespace homlex {

BigCount lex_ind_closed(const LexParams& p) {
    const auto [n, k, w, m] = p;
    const bool complete = (k == n - 1 && w == 0 && m == pairs(n));
    const bool normal =
        k >= 0 && k <= n - 2 && w >= 0 && w <= n - k - 2 && m == split_edges(n, k) + w;
    if (n < 1 || (!complete && !normal))
        throw InfeasibleError("invalid lex decomposition");
    return big_pow2(n - k - 1) + big_pow2(n - k - w - 1) + k;
}

bool r_feasible(const RParams& r) {
    if (r.n < 0 || r.q < 0 || r.m < 0 || r.q > r.n) return false;
    if (r.m == 0) return r.q == 0;
    return r.q >= 2 && r.q <= r.m + 1 && r.m <= pairs(r.q);
}

Graph r_graph(const RParams& r) {
    if (!r_feasible(r)) throw InfeasibleError("infeasible R(n,q;m)");
    return disjoint_union(lex_graph(static_cast<int>(r.q), r.m),
                          empty_graph(static_cast<int>(r.n - r.q)));
}

BigCount j_of_r(const RParams& r) {
    if (!r_feasible(r)) throw InfeasibleError("infeasible R(n,q;m)");
    if (r.m == 0) return big_pow3(r.n);
    return big_pow3(r.n - r.q) * lex_ind_closed(lex_decompose(r.q, r.m));
}

namespace {

constexpr double kLog2Of3 = 1.5849625007211562;

// i(L(q,m)) = 2^a + 2^b + k with a = q-k-1 >= b >= 0. Shapes carry a safe
// log2 interval so the window scan can reject most candidates without
// touching bignums: i <= 3 * max(2^a, k).
struct Shape {
    std::int64_t q = 0, k = 0, w = 0, a = 0, b = 0;
    double lo = 0.0, hi = 0.0;
};

Shape shape_at(std::int64_t q, std::int64_t m) {
    const LexParams p = lex_decompose(q, m);
    Shape s;
    s.q = q;
    s.k = p.k;
    s.w = p.w;
    s.a = q - p.k - 1;
    s.b = q - p.k - p.w - 1;
    const double logk = p.k > 0 ? std::log2(static_cast<double>(p.k)) : -1e300;
    s.lo = std::max(static_cast<double>(s.a), logk);
    s.hi = s.lo + 1.585;
    return s;
}

BigCount shape_value(const Shape& s) {
    return big_pow2(s.a) + big_pow2(s.b) + s.k;
}

int sgn(int c) { return (c > 0) - (c < 0); }

// Sign of 3^{-x.q} i(x) - 3^{-y.q} i(y); the min power of 3 is cancelled so
// the compared numbers stay at O(q) bits.
int cmp_j(const Shape& x, const Shape& y) {
    if (x.q == y.q)
        return sgn(cmp(shape_value(x), shape_value(y)));
    const bool x_low = x.q < y.q;
    const Shape& low = x_low ? x : y;
    const Shape& high = x_low ? y : x;
    const BigCount lhs = shape_value(low) * big_pow3(high.q - low.q);
    const int c = sgn(cmp(lhs, shape_value(high)));
    return x_low ? c : -c;
}

std::int64_t q_min_for(std::int64_t m) {
    std::int64_t q = (1 + isqrt(1 + 8 * m)) / 2;
    while (pairs(q) < m) ++q;
    while (q > 0 && pairs(q - 1) >= m) --q;
    return q;
}

struct ScanResult {
    std::vector<std::int64_t> q_set;
    Shape best;
};

ScanResult scan_window(std::int64_t m, std::int64_t q_lo, std::int64_t q_hi) {
    ScanResult r;
    bool have = false;
    double best_score_lo = 0.0;
    for (std::int64_t q = q_lo; q <= q_hi; ++q) {
        Shape s = shape_at(q, m);
        const double score_hi = s.hi - kLog2Of3 * static_cast<double>(q);
        if (have && score_hi < best_score_lo - 0.5) continue;
        if (!have) {
            r.best = s;
            r.q_set = {q};
            best_score_lo = s.lo - kLog2Of3 * static_cast<double>(q);
            have = true;
            continue;
        }
        const int c = cmp_j(s, r.best);
        if (c > 0) {
            r.best = s;
            r.q_set = {q};
            best_score_lo = s.lo - kLog2Of3 * static_cast<double>(q);
        } else if (c == 0) {
            r.q_set.push_back(q);
        }
    }
    if (!have) throw InfeasibleError("empty feasibility window");
    return r;
}

} // namespace

QSetResult extremal_q_set(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m > pairs(n))
        throw InfeasibleError("extremal_q_set: m out of range");
    if (m == 0) return QSetResult{{0}, big_pow3(n)};
    const ScanResult r = scan_window(m, q_min_for(m), std::min(n, m + 1));
    QSetResult out;
    out.q_set = r.q_set;
    out.value = big_pow3(n - r.best.q) * shape_value(r.best);
    return out;
}

namespace {

bool upper_bound_ok(std::int64_t ell_value, std::int64_t m) {
    const std::int64_t d = 2 * ell_value - 5;
    return 2 * ell_value <= 5 || d * d <= 9 + 24 * m;
}

bool lower_bound_ok(std::int64_t ell_value, std::int64_t m) {
    const std::int64_t d = 2 * ell_value - 1;
    return d * d >= 1 + 8 * m;
}

std::int64_t upper_bracket(std::int64_t m) {
    std::int64_t u = (5 + isqrt(9 + 24 * m)) / 2;
    while (!upper_bound_ok(u, m)) --u;
    while (upper_bound_ok(u + 1, m)) ++u;
    return u;
}

} // namespace

EllRecord ell(std::int64_t m, EllWindow window) {
    if (m < 1) throw InfeasibleError("ell(m) is defined for m >= 1");
    const std::int64_t lower = q_min_for(m);
    const std::int64_t upper = upper_bracket(m);
    const bool full = window == EllWindow::Full ||
                      (window == EllWindow::Auto && m <= kEllFullWindowLimit);
    const std::int64_t q_hi = full ? m + 1 : std::min(m + 1, upper + 2);
    const ScanResult r = scan_window(m, lower, q_hi);

    EllRecord rec;
    rec.m = m;
    rec.ell = r.q_set.back();
    rec.lower = lower;
    rec.upper = upper;
    rec.lower_ok = lower_bound_ok(rec.ell, m);
    rec.upper_ok = upper_bound_ok(rec.ell, m);
    rec.ratio = static_cast<double>(rec.ell) / std::sqrt(static_cast<double>(m));
    return rec;
}

bool ell_bounds_check(std::int64_t m) {
    const EllRecord rec = ell(m);
    return rec.lower_ok && rec.upper_ok;
}

bool stability_check(std::int64_t m, std::int64_t n_max) {
    const std::int64_t l = ell(m).ell;
    if (n_max < l) throw InfeasibleError("stability check needs n_max >= ell(m)");
    for (std::int64_t n = l; n <= n_max; ++n) {
        const ScanResult r = scan_window(m, q_min_for(m), std::min(n, m + 1));
        if (r.q_set.back() != l) return false;
    }
    return true;
}

namespace {

// Row-parallel driver: slot per m keeps output deterministic regardless of
// thread count.
template <typename Row, typename Fn>
std::vector<Row> parallel_rows(std::int64_t lo, std::int64_t hi, int threads, Fn fn) {
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Row> rows(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = fn(lo + static_cast<std::int64_t>(i));
        return rows;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < count;
                 i += static_cast<std::size_t>(threads))
                rows[i] = fn(lo + static_cast<std::int64_t>(i));
        });
    for (auto& th : pool) th.join();
    return rows;
}

} // namespace

std::vector<SweepRecord> sweep(std::int64_t n, std::int64_t m_lo, std::int64_t m_hi,
                               int threads) {
    if (m_lo < 1 || m_lo > m_hi || m_hi > pairs(n))
        throw InfeasibleError("sweep range outside [1, C(n,2)]");
    return parallel_rows<SweepRecord>(m_lo, m_hi, threads, [n](std::int64_t m) {
        QSetResult q = extremal_q_set(n, m);
        SweepRecord rec;
        rec.n = n;
        rec.m = m;
        rec.q_star_max = q.q_set.back();
        rec.q_tie_count = static_cast<std::int64_t>(q.q_set.size());
        rec.j_value = std::move(q.value);
        return rec;
    });
}

std::vector<EllRecord> ell_range(std::int64_t m_lo, std::int64_t m_hi,
                                 EllWindow window, int threads) {
    if (m_lo < 1 || m_lo > m_hi)
        throw InfeasibleError("ell range needs 1 <= m_lo <= m_hi");
    return parallel_rows<EllRecord>(m_lo, m_hi, threads,
                                    [window](std::int64_t m) { return ell(m, window); });
}

std::string sweep_csv_header() { return "n,m,q_star_max,q_tie_count,j_value"; }

std::string sweep_csv_row(const SweepRecord& r) {
    return std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::to_string(r.q_star_max) + "," + std::to_string(r.q_tie_count) + "," +
           to_decimal(r.j_value);
}

std::string ell_csv_header() { return "m,ell,lower_ok,upper_ok,ratio"; }

std::string ell_csv_row(const EllRecord& r) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    return std::to_string(r.m) + "," + std::to_string(r.ell) + "," +
           (r.lower_ok ? "true" : "false") + "," + (r.upper_ok ? "true" : "false") +
           "," + ratio;
}

std::string subcase_name(Subcase s) {
    switch (s) {
        case Subcase::S1a: return "1a";
        case Subcase::S1b: return "1b";
        case Subcase::S1c: return "1c";
        case Subcase::S2a: return "2a";
        case Subcase::S2b: return "2b";
    }
    return "?";
}

LedgerRow subcase_ledger(std::int64_t n, std::int64_t k, std::int64_t w) {
    LedgerRow row;
    row.n = n;
    row.k = k;
    row.w = w;

    if (k < 1 || w < 0 || k > n - 1 || w > n - k - 2) {
        row.note = "not a normal lex shape with k >= 1";
        return row;
    }
    row.m = split_edges(n, k) + w;
    if (n < 3 * k + 3) {
        row.note = "outside proof umbrella n >= 3k+3";
        return row;
    }

    const bool case1 = w <= n - 2 * k - 3;
    if (case1)
        row.subcase = (w >= 1) ? Subcase::S1a : (k >= 2 ? Subcase::S1b : Subcase::S1c);
    else
        row.subcase = (w <= n - 2 * k - 1) ? Subcase::S2a : Subcase::S2b;
    row.has_double_prime = row.subcase == Subcase::S1b || row.subcase == Subcase::S2b;

    if (row.m > pairs(n - 1) || (row.has_double_prime && row.m > pairs(n - 2))) {
        row.note = "reduced-order lex graph infeasible";
        return row;
    }

    const BigCount jg = lex_ind_closed(lex_decompose(n, row.m));
    const BigCount jgp = 3 * lex_ind_closed(lex_decompose(n - 1, row.m));
    row.delta_prime = jgp - jg;

    bool ok;
    if (row.has_double_prime) {
        const BigCount jgpp = 9 * lex_ind_closed(lex_decompose(n - 2, row.m));
        row.delta_double_prime = jgpp - jg;
        ok = row.delta_prime < 0 && row.delta_double_prime > 0;
    } else {
        ok = row.delta_prime > 0;
    }
    row.status = ok ? LedgerStatus::Ok : LedgerStatus::Violated;
    return row;
}

std::vector<LedgerRow> subcase_ledger_all(std::int64_t n_max) {
    std::vector<LedgerRow> rows;
    for (std::int64_t n = 6; n <= n_max; ++n)
        for (std::int64_t k = 1; 3 * k + 3 <= n; ++k)
            for (std::int64_t w = 0; w <= n - k - 2; ++w)
                rows.push_back(subcase_ledger(n, k, w));
    return rows;
}

std::string ledger_csv_header() {
    return "n,k,w,m,subcase,delta_prime,delta_double_prime,status";
}

std::string ledger_csv_row(const LedgerRow& r) {
    const char* status = r.status == LedgerStatus::Ok        ? "ok"
                         : r.status == LedgerStatus::Violated ? "violated"
                                                              : "skipped";
    std::string deltas = r.status == LedgerStatus::Skipped
                             ? ","
                             : to_decimal(r.delta_prime) + "," +
                                   (r.has_double_prime ? to_decimal(r.delta_double_prime)
                                                       : std::string{});
    return std::to_string(r.n) + "," + std::to_string(r.k) + "," +
           std::to_string(r.w) + "," + std::to_string(r.m) + "," +
           subcase_name(r.subcase) + "," + deltas + "," + status;
}

} // namespace homlex
