#ifndef HOMLEX_HOM_HPP
#define HOMLEX_HOM_HPP

#include <cstdint>
#include <vector>

#include "homlex/codes.hpp"
#include "homlex/graph.hpp"
#include "homlex/numbers.hpp"

namespace homlex {

/// Explicit work budget for the counting routines. Counting never truncates
/// silently: exceeding the budget throws InstanceTooLargeError.
struct HomLimits {
    std::uint64_t max_nodes = 1'000'000'000;
};

/// Exact |Hom(g,h)| by backtracking over vertex assignments in a fixed
/// (descending-degree) order, pruning each candidate against the images of
/// already-assigned neighbors. A looped source vertex admits only looped
/// images. hom(E_0, h) = 1.
BigCount hom_count(const Graph& g, const Graph& h, const HomLimits& limits = {});

/// Subset-state dynamic program over the construction sequence of a
/// threshold source: equals hom_count(decode_threshold(code), h) in
/// O(n * 2^|V(h)| * |V(h)|). Requires |V(h)| <= 20.
BigCount hom_count_threshold(const ThresholdCode& code, const Graph& h,
                             const HomLimits& limits = {});

/// Number of independent sets, i(g) = hom(g, H_ind). Requires g loop-free.
BigCount ind_count(const Graph& g, const HomLimits& limits = {});

/// Independent-set counts by size: counts[t] = number of independent sets of
/// cardinality t. counts[0] = 1, counts[1] = n, total() = i(g).
struct IndProfile {
    std::vector<BigCount> counts;

    BigCount total() const;
};

IndProfile ind_profile(const Graph& g, const HomLimits& limits = {});

/// Nonnegative rational weight per image vertex.
class Weighting {
  public:
    explicit Weighting(std::vector<Rational> weights);

    static Weighting uniform(int n);
    /// beta^lambda on H_ind as labeled by make_h_ind(): the unlooped vertex
    /// gets weight lambda, the looped vertex weight 1.
    static Weighting beta_lambda(const Rational& lambda);

    const Rational& operator[](int v) const { return w_[v]; }
    int size() const { return static_cast<int>(w_.size()); }

  private:
    std::vector<Rational> w_;
};

/// hom_beta(g,h) = sum over homomorphisms of the product of image weights.
/// Reduces to hom_count when beta == 1.
Rational partition_function(const Graph& g, const Graph& h, const Weighting& beta,
                            const HomLimits& limits = {});

/// P_g(lambda) = sum_t i_t(g) lambda^t, evaluated from the profile. Equals
/// partition_function(g, H_ind, beta_lambda(lambda)).
Rational independence_poly_eval(const Graph& g, const Rational& lambda,
                                const HomLimits& limits = {});

/// Closed forms for the three solved image patterns, chosen by the display
/// string of the image code:
///   0^q          : 0 when g has an edge, else q^n
///   1^p          : p^n
///   0^q 1^p      : (p+q)^c * p^(n-c), c = count_isolates(g)
/// Requires g loop-free; throws PatternUnsupportedError on any other code.
BigCount hom_closed_forms(const Graph& g, const LoopThresholdCode& image);

/// Checks hom(g, S°(p,q)) = sum_t i_t(g) p^t q^(n-t), the denominators-
/// cleared form of hom = q^n P_g(p/q). Always expected true.
bool s_circ_identity_check(const Graph& g, int p, int q,
                           const HomLimits& limits = {});

} // namespace homlex

#endif
