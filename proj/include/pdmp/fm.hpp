#pragma once

#include <cstddef>
#include <vector>

#include "pdmp/state.hpp"

namespace pdmp {

/// Prepared instance for the bounded-Lipschitz (Fortet-Mourier) distance
/// between two finitely supported measures on the hybrid space: deduplicated
/// union support, per-measure weight vectors, and the pairwise distances.
struct FmProblem {
  std::vector<HybridState> support;
  std::vector<double> mu_w, nu_w;  // each sums to 1
  HybridMetric metric;

  static FmProblem build(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                         const HybridMetric& metric);

  std::size_t size() const { return support.size(); }
  double distance(std::size_t k, std::size_t l) const {
    return hybrid_distance(support[k], support[l], metric);
  }
};

/// Exact optimum of: max sum f_k (mu_k - nu_k) over 0 <= f <= 1 with
/// |f_k - f_l| <= rho(x_k, x_l). Constraints with rho >= 1 are implied by the
/// box bounds and dropped. For one-dimensional coordinates with regime
/// penalty c >= 1 the program splits per regime into a chain and is solved by
/// a concave piecewise-linear sweep; otherwise by min-cost flow on the dual
/// (transport at cost rho, disposal at cost 1).
double fm_distance(const FmProblem& p);

/// Convenience wrapper building the problem first.
double fm_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                   const HybridMetric& metric);

/// Independent brute-force check for tiny instances (support <= 4): exact
/// enumeration of the feasible polytope's vertices, plus a 1e-3 grid sweep
/// for supports of size <= 2. Throws for larger supports.
double fm_distance_oracle(const FmProblem& p);

}  // namespace pdmp
