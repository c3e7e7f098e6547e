#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pdmp/rng.hpp"
#include "pdmp/state.hpp"

namespace pdmp {

/// Affine map w(y) = A y + c, A stored row-major.
struct AffineMap {
  std::vector<double> A;  // d*d entries, row-major
  Vec c;

  Vec apply(const Vec& y) const;
};

/// Finite iterated function system with place-dependent selection
/// probabilities: J(y, .) puts mass p_theta(y) on w_theta(y).
struct FiniteIfsKernel {
  std::vector<AffineMap> maps;
  std::function<std::vector<double>(const Vec&)> probs;

  std::vector<double> probs_at(const Vec& y) const;  // validates normalization
};

/// Additive burst: w_theta(y) = y + theta * e with theta drawn from a fixed,
/// state-independent law.
struct AdditiveBurstKernel {
  struct ExponentialLaw {
    double mean = 1.0;
  };
  struct DiscreteLaw {
    std::vector<std::pair<double, double>> atoms;  // (theta, weight)
  };
  std::variant<ExponentialLaw, DiscreteLaw> law;
  Vec direction;  // e

  double sample_theta(RngStream& rng) const;
  double mean_abs_theta() const;
};

using JumpKernel = std::variant<FiniteIfsKernel, AdditiveBurstKernel>;

std::size_t jump_dim(const JumpKernel& kernel);

/// Constants certifying the jump-kernel hypotheses: contraction a~, Lyapunov
/// offset b~, probability Lipschitz constant l~, and overlap eta.
struct JumpRegularityCertificate {
  double a_tilde = 1.0;
  double b_tilde = 0.0;
  double l_tilde = 1.0;
  double eta = 1.0;
  Vec ystar;
};

struct CoupledJumpOutcome {
  enum class Branch { Coupled, Residual };
  Branch branch = Branch::Coupled;
  Vec u1, u2;
  std::optional<std::size_t> theta1, theta2;  // map indices (IFS only)
};

/// One draw from J(y, .).
Vec sample_jump(const JumpKernel& kernel, const Vec& y, RngStream& rng);

/// Total synchronized mass s = sum_theta min(p_theta(y1), p_theta(y2));
/// 1 for state-independent (burst) kernels.
double coupled_jump_mass(const JumpKernel& kernel, const Vec& y1, const Vec& y2);

/// Exact draw from the coupled kernel Q_J plus its residual: with probability
/// s both coordinates share one theta; otherwise they draw independently from
/// the normalized leftover weights. Both marginals equal J exactly.
CoupledJumpOutcome sample_coupled_jump(const JumpKernel& kernel, const Vec& y1,
                                       const Vec& y2, RngStream& rng);

/// Draw from the normalized synchronized kernel Q_J / s: both coordinates
/// share one theta drawn proportional to min(p_theta(y1), p_theta(y2)).
/// Precondition: coupled_jump_mass(kernel, y1, y2) > 0.
CoupledJumpOutcome sample_synchronized_jump(const JumpKernel& kernel, const Vec& y1,
                                            const Vec& y2, RngStream& rng);

/// Per-condition worst-case report for the jump hypotheses.
struct JumpHypothesesReport {
  double contraction_ratio = 0.0;  // observed sup of sum rho(w y1, w y2) p(y1) / rho(y1,y2)
  double min_overlap = 1.0;        // observed inf of the eta bound
  double prob_lipschitz = 0.0;     // observed sup of sum|p(y1)-p(y2)| / rho(y1,y2)
  double b_tilde_observed = 0.0;   // observed sup of the b~ quantity
  bool contraction_pass = false;
  bool overlap_pass = false;
  bool lipschitz_pass = false;
  bool b_pass = false;
  std::size_t n_samples = 0;
  std::size_t n_skipped = 0;
  bool pass() const { return contraction_pass && overlap_pass && lipschitz_pass && b_pass; }
};

using PairSampler = std::function<std::pair<Vec, Vec>(RngStream&)>;

JumpHypothesesReport check_jump_hypotheses(const JumpKernel& kernel,
                                           const JumpRegularityCertificate& cert,
                                           const PairSampler& sampler, std::size_t n,
                                           RngStream& rng,
                                           const HybridMetric& metric = HybridMetric(1.0));

PairSampler box_pair_sampler(std::size_t dim, double lo, double hi);

/// Atom list (point, weight) of J(y, .) for a finite IFS; used by exact tests.
std::vector<std::pair<Vec, double>> ifs_jump_atoms(const FiniteIfsKernel& kernel,
                                                   const Vec& y);

}  // namespace pdmp
