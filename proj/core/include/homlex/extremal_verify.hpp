#ifndef HOMLEX_EXTREMAL_VERIFY_HPP
#define HOMLEX_EXTREMAL_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homlex/codes.hpp"
#include "homlex/graph.hpp"
#include "homlex/hom.hpp"
#include "homlex/numbers.hpp"

namespace homlex {

enum class GraphClass { AllLabeled, UpToIso, ThresholdCodes };

struct GraphClassSpec {
    int n = 0;
    std::int64_t m = 0;
    GraphClass cls = GraphClass::AllLabeled;
    std::uint64_t labeled_cap = 20'000'000; // max C(C(n,2), m) streamed
    int iso_n_cap = 8;                      // canonicalizer budget
};

/// Complete, duplicate-free stream of the class. AllLabeled walks every
/// m-subset of the pair set; UpToIso additionally dedupes by canonical form;
/// ThresholdCodes decodes the 2^(n-1) codes with matching edge count.
void enumerate_graphs(const GraphClassSpec& spec,
                      const std::function<void(const Graph&)>& sink);

void enumerate_threshold_codes(int n, std::int64_t m,
                               const std::function<void(const ThresholdCode&)>& sink);

/// Canonical form of a loop-free graph on n <= 11 vertices: the
/// lexicographically minimal upper-triangular adjacency bitstring over all
/// vertex permutations (column-major pair order), found by branch and bound.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Maximum of hom(., h) over a graph class, with every witness up to
/// isomorphism. Witness storage is capped; uniqueness checks refuse to
/// decide on a truncated set (witness_overflow).
struct ExtremalReport {
    BigCount max_value;
    std::vector<Graph> witnesses;             // one representative per class
    std::vector<CanonicalForm> witness_forms; // parallel to witnesses
    bool witness_overflow = false;
    std::uint64_t enumerated = 0;
};

struct ExtremalOptions {
    std::size_t witness_cap = 64;
    HomLimits limits{};
};

ExtremalReport max_hom_over_class(const GraphClassSpec& spec, const Graph& h,
                                  const ExtremalOptions& opts = {});

/// Result of one verification suite over one parameter point.
struct VerifyOutcome {
    bool passed = true;
    std::optional<Graph> counterexample;
    std::string detail;
};

/// i(G) <= i(L(n,m)) over all labeled graphs, equality only at L(n,m).
/// Uniqueness is checked on the exact witness set: throws
/// WitnessOverflowError if the set was truncated.
VerifyOutcome verify_lex_extremal(int n, std::int64_t m);

/// i_t(G) <= i_t(L(n,m)) for one t, and for every t at once.
VerifyOutcome verify_level_extremal(int n, std::int64_t m, int t);
VerifyOutcome verify_level_extremal_all_t(int n, std::int64_t m);

/// P_G(lambda) <= P_L(n,m)(lambda) for each lambda in the grid, exactly.
VerifyOutcome verify_wtd_extremal(int n, std::int64_t m,
                                  const std::vector<Rational>& lambda_grid);

/// Threshold-class maximum equals the all-graph maximum for the image
/// decode(h_code).
VerifyOutcome verify_threshold_sufficiency(int n, std::int64_t m,
                                           const LoopThresholdCode& h_code);

/// Every witness of the threshold-class maximum for J decodes to
/// R(n,q,m) = L(q,m) u E_{n-q} for some feasible q. Threshold codes are
/// canonical, so the check is code equality.
VerifyOutcome verify_j_composition(int n, std::int64_t m);

} // namespace homlex

#endif
