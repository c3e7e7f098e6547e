#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pdmp/jump.hpp"
#include "pdmp/rng.hpp"
#include "pdmp/semiflow.hpp"
#include "pdmp/state.hpp"

namespace pdmp {

/// Query time beyond the simulated horizon; the caller extends the trajectory.
struct HorizonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full model tuple: semiflows, jump kernel, switching matrix, jump rate,
/// reference point, and the hybrid metric used for all distances.
struct ModelSpec {
  SemiflowSpec flows;
  JumpKernel jump;
  std::vector<std::vector<double>> pi;  // row-stochastic
  double lambda = 1.0;
  Vec ystar;
  HybridMetric metric;
  bool require_nonnegative = false;  // gene model: Y = [0, inf)^d, guard only

  std::size_t num_regimes() const { return pi.size(); }
  void validate() const;
};

struct ChainTrajectory {
  std::vector<HybridState> states;  // Phi_n
  std::vector<double> jump_times;   // tau_n, strictly increasing, tau_0 = 0
};

/// One step of the augmented chain: draw the holding time, flow, jump at the
/// flowed point, then switch the regime. The (y', j) marginal is the post-jump
/// kernel P.
AugmentedState step_chain(const ModelSpec& model, const AugmentedState& state,
                          RngStream& rng);

ChainTrajectory simulate_chain(const ModelSpec& model, const HybridState& x0,
                               std::size_t n, RngStream& rng);

/// Interpolated process value Psi(t): flow the last post-jump state for the
/// elapsed time since its jump. Throws HorizonError for t past the last jump.
HybridState process_at(const ModelSpec& model, const ChainTrajectory& traj, double t);

/// G: flow for an Exp(lambda) time, keep the regime.
HybridState apply_G(const ModelSpec& model, const HybridState& x, RngStream& rng);

/// W: jump the coordinate via J and switch the regime via pi, independently.
HybridState apply_W(const ModelSpec& model, const HybridState& x, RngStream& rng);

/// CSV export with columns n,tau,y_0..y_{d-1},regime.
void write_trajectory_csv(std::ostream& os, const ChainTrajectory& traj);

}  // namespace pdmp
