#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

#include "pdmp/pdmp.hpp"

namespace pdmp {

/// Pair of hybrid states sharing one jump clock.
struct CoupledState {
  HybridState x1, x2;
  double tau = 0.0;
};

enum class BranchFlag { Q, R };

inline constexpr std::size_t kNoCoupling = std::numeric_limits<std::size_t>::max();

struct CoupledTrace {
  std::vector<CoupledState> states;
  std::vector<BranchFlag> branch_flags;  // one per transition
  std::size_t kappa = kNoCoupling;       // first n with equal regimes
};

/// One step of the coupling kernel: a shared Exp(lambda) holding time, then
/// either the synchronized branch (shared regime target and shared jump map,
/// probability m(pi rows) * s(jump overlap at the flowed points)) or the
/// exact per-holding-time residual, drawn independently per coordinate.
/// Coordinate marginals equal the one-step chain kernel exactly.
std::pair<CoupledState, BranchFlag> step_coupled(const ModelSpec& model,
                                                 const JumpRegularityCertificate& cert,
                                                 const CoupledState& z, RngStream& rng);

/// Simulate n coupled steps from (x1, x2, 0); records branch flags and the
/// regime coupling time kappa. With identify_regimes the second coordinate's
/// regime is overwritten by the first's for every index past kappa (the
/// identified-copy device); the underlying evolution is not altered.
CoupledTrace simulate_coupled(const ModelSpec& model,
                              const JumpRegularityCertificate& cert,
                              const HybridState& x1, const HybridState& x2,
                              std::size_t n, RngStream& rng,
                              bool identify_regimes = false);

/// Interpolate both coordinates of the coupled pair with the shared clock.
/// With identify_regimes the second coordinate adopts the first's regime for
/// anchors past the coupling time.
std::pair<HybridState, HybridState> coupled_process_at(const ModelSpec& model,
                                                       const CoupledTrace& trace,
                                                       double t,
                                                       bool identify_regimes = false);

/// CSV export with columns n,tau,y1_*,i1,y2_*,i2,branch,rho_bar.
void write_coupled_trace_csv(std::ostream& os, const CoupledTrace& trace,
                             const HybridMetric& metric);

}  // namespace pdmp
