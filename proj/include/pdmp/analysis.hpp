#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdmp/coupling.hpp"
#include "pdmp/fm.hpp"
#include "pdmp/pdmp.hpp"

#include "json.hpp"

namespace pdmp {

/// Raised when a rate fit has fewer than five usable points above the
/// Monte Carlo noise floor.
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Derived drift/contraction constants of the verification machinery, with
/// the certified inputs echoed.
struct ConstantsReport {
  double a = 0.0;      // one-step mean contraction factor
  double b = 0.0;      // one-step drift offset
  double R = 0.0;      // 4b/(1-a), radius of the recurrent coordinate ball
  double M_L = 0.0;    // sup of the divergence gauge on that ball
  double M_phi = 0.0;  // sup of phi on [0, t0]
  double K_phi = 0.0;  // int_0^inf e^{-lambda t} phi(t) dt
  double t0 = 0.0;     // ln(lambda/(lambda-alpha))/alpha, 1/lambda at alpha=0
  double c_min = 0.0;  // smallest admissible regime-mismatch penalty
  // inputs
  double a_tilde = 0.0, b_tilde = 0.0, L = 0.0, alpha = 0.0, lambda = 0.0;
  bool hypotheses_ok = false;  // a in (0,1)
  bool M_L_sampled = false;    // sampled supremum with 10% inflation
  std::string note;
};

ConstantsReport compute_constants(const ModelSpec& model,
                                  const FlowRegularityCertificate& flow_cert,
                                  const JumpRegularityCertificate& jump_cert);

/// Least-squares exponential-rate fit on a decay curve, with the per-step or
/// per-time grid it was fitted on.
struct RateEstimate {
  double rate = 0.0;       // q-hat per step, or gamma-hat per unit time
  double intercept = 0.0;  // fitted log-level at grid origin
  double r_squared = 0.0;
  std::size_t n_points = 0;
  std::size_t n_samples = 0;
  // full measured curve (also outside the fit window), for artifact export
  std::vector<double> grid, mean, se;
};

struct LyapunovPoint {
  HybridState x;
  double V = 0.0;
  double bound = 0.0;     // a V + b
  double estimate = 0.0;  // Monte Carlo E[V after one step]
  double se = 0.0;
  bool pass = false;
};

struct LyapunovReport {
  std::vector<LyapunovPoint> points;
  std::size_t n_samples = 0;
  bool pass = false;
};

LyapunovReport lyapunov_check(const ModelSpec& model, const ConstantsReport& constants,
                              const std::vector<HybridState>& test_points,
                              std::size_t n_samples, std::uint64_t seed);

using StatePair = std::pair<HybridState, HybridState>;

/// Fit of the per-step geometric decay of E rho-bar along coupled chains.
RateEstimate estimate_chain_contraction(const ModelSpec& model,
                                        const JumpRegularityCertificate& cert,
                                        const std::vector<StatePair>& pairs,
                                        std::size_t n_steps, std::size_t n_samples,
                                        std::uint64_t seed);

/// Fit of the continuous-time decay of E rho-bar along coupled interpolated
/// processes, by default on the regime-identified copy.
RateEstimate estimate_process_decay(const ModelSpec& model,
                                    const JumpRegularityCertificate& cert,
                                    const std::vector<StatePair>& pairs,
                                    const std::vector<double>& time_grid,
                                    std::size_t n_samples, std::uint64_t seed,
                                    bool identify_regimes = true);

/// Empirical test of the stationarity exchange between the embedded chain and
/// the interpolated process: mu_Psi should match mu_Phi pushed through the
/// exponential-time flow step, and mu_Phi should match mu_Psi pushed through
/// the jump step.
struct CorrespondenceReport {
  double fm_phi_g_vs_psi = 0.0;  // d(mu_Phi G, mu_Psi)
  double fm_psi_w_vs_phi = 0.0;  // d(mu_Psi W, mu_Phi)
  double ci_phi_g_lo = 0.0, ci_phi_g_hi = 0.0;  // bootstrap 95% intervals
  double ci_psi_w_lo = 0.0, ci_psi_w_hi = 0.0;
  double self_distance = 0.0;  // same-law noise floor from two chain builds
  std::size_t n_stat = 0, n_samples = 0, n_bootstrap = 0;
};

CorrespondenceReport invariant_correspondence_test(const ModelSpec& model,
                                                   std::size_t burn_in,
                                                   std::size_t n_stat, double T,
                                                   std::size_t n_samples,
                                                   std::uint64_t seed,
                                                   std::size_t n_bootstrap = 200);

/// One named hypothesis check with its observed worst margin.
struct CheckOutcome {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // worst observed value of the checked quantity
  double slack = 0.0;  // allowance it was compared against
  std::size_t n = 0;
};

using PointSampler = std::function<Vec(RngStream&)>;

/// One-step jump drift bound: E[rho(Y', y*) | jump from y] vs
/// a~ rho(y, y*) + b~ on sampled points. Exact for finite IFS kernels.
CheckOutcome check_A1(const ModelSpec& model, const JumpRegularityCertificate& cert,
                      const PointSampler& sampler, std::size_t n, std::uint64_t seed);

/// Finiteness of the discounted flow-displacement integral (reported per
/// regime via its maximum) and reachability of a common regime: some column
/// of pi must have a positive minimum.
std::vector<CheckOutcome> check_A2_A5(const ModelSpec& model);

PointSampler box_point_sampler(std::size_t dim, double lo, double hi);

// --- JSON report serialization (stable field names) ---
nlohmann::json to_json(const ConstantsReport& r);
nlohmann::json to_json(const RateEstimate& r);
nlohmann::json to_json(const CheckOutcome& r);
nlohmann::json to_json(const LyapunovReport& r);
nlohmann::json to_json(const CorrespondenceReport& r);

ConstantsReport constants_from_json(const nlohmann::json& j);
RateEstimate rate_from_json(const nlohmann::json& j);
CheckOutcome check_from_json(const nlohmann::json& j);

}  // namespace pdmp
