#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdmp/rng.hpp"
#include "pdmp/state.hpp"

namespace pdmp {

/// Per-regime affine contraction S_i(t,y) = e^{alpha_i t}(y - r_i) + r_i.
/// Exact to machine precision, and all regularity constants are closed-form.
struct AffineFlow {
  double alpha = -1.0;
  Vec fixed_point;  // r_i
};

/// Right-hand side of an ODE-defined flow, integrated with fixed-step RK4.
struct OdeFlow {
  std::function<void(const Vec& y, Vec& dy)> field;
};

struct SemiflowSpec {
  enum class Kind { AffineContraction, IntegratedOde };

  Kind kind = Kind::AffineContraction;
  std::vector<AffineFlow> affine;  // one per regime
  std::vector<OdeFlow> ode;        // one per regime
  double h_int = 1e-3;             // RK4 step size (IntegratedOde only)

  std::size_t num_regimes() const {
    return kind == Kind::AffineContraction ? affine.size() : ode.size();
  }
  std::size_t dim() const;

  static SemiflowSpec affine_contractions(std::vector<AffineFlow> flows);
  static SemiflowSpec integrated(std::vector<OdeFlow> fields, std::size_t dim, double h_int);

 private:
  std::size_t ode_dim_ = 0;
};

/// Evaluate S_i(t, y). Negative t is an input error.
Vec flow(const SemiflowSpec& spec, int regime, double t, const Vec& y);

/// Closed-form families for the inter-flow divergence envelope phi of the
/// regularity certificate; Custom falls back to adaptive quadrature.
struct PhiFunction {
  enum class Kind { Zero, Linear, ExpSaturating, DiffExp, Custom };

  Kind kind = Kind::Zero;
  double scale = 0.0;   // Linear: phi = scale*t; ExpSaturating: phi = scale*(1-e^{rate t})
  double rate = 0.0;    // ExpSaturating rate (negative); DiffExp: phi = |e^{-k1 t}-e^{-k2 t}|
  double k1 = 0.0, k2 = 0.0;
  std::function<double(double)> custom;

  double operator()(double t) const;

  static PhiFunction zero() { return {}; }
  static PhiFunction linear(double scale);
  static PhiFunction exp_saturating(double scale, double rate);
  static PhiFunction diff_exp(double k1, double k2);
  static PhiFunction custom_fn(std::function<double(double)> f);
};

/// Lipschitz/divergence certificate for the semiflow family:
///   rho(S_i(t,u), S_i(t,v)) <= L e^{alpha t} rho(u,v)
///   rho(S_i(t,y), S_j(t,y)) <= phi(t) Lfun(y)
struct FlowRegularityCertificate {
  double L = 1.0;
  double alpha = -1.0;
  PhiFunction phi;
  std::function<double(const Vec&)> Lfun;  // null means Lfun == 1
  // Exact sup of Lfun over the ball of a given radius around y*, when known in
  // closed form; null falls back to sampled suprema with a safety margin.
  std::function<double(double)> Lfun_ball_sup;
  bool exact = true;  // false for sampled/integrated certificates

  double eval_Lfun(const Vec& y) const { return Lfun ? Lfun(y) : 1.0; }
};

/// K_phi = int_0^inf e^{-lambda t} phi(t) dt. Closed form for the built-in
/// families, adaptive quadrature (rel. tol 1e-10) otherwise. Throws
/// std::domain_error when the integral diverges.
double K_phi(const FlowRegularityCertificate& cert, double lambda);

struct CheckReport {
  bool pass = false;
  double worst_ratio = 0.0;
  std::size_t n_samples = 0;
  std::size_t n_skipped = 0;  // degenerate samples (zero denominator)
  bool exact_certificate = true;
  std::string note;
};

/// Sample for the flow-contraction check: a pair of points, a time, a regime.
struct A3Sample {
  Vec u, v;
  double t = 0.0;
  int regime = 0;
};

/// Sample for the inter-flow divergence check.
struct A4Sample {
  Vec y;
  double t = 0.0;
  int regime_i = 0, regime_j = 0;
};

using A3Sampler = std::function<A3Sample(RngStream&)>;
using A4Sampler = std::function<A4Sample(RngStream&)>;

/// Sampling-based falsifier for rho(S_i(t,u),S_i(t,v)) <= L e^{alpha t} rho(u,v).
CheckReport check_A3(const SemiflowSpec& spec, const FlowRegularityCertificate& cert,
                     const A3Sampler& sampler, std::size_t n_pairs, RngStream& rng,
                     const HybridMetric& metric = HybridMetric(1.0));

/// Sampling-based falsifier for rho(S_i(t,y),S_j(t,y)) <= phi(t) Lfun(y).
CheckReport check_A4(const SemiflowSpec& spec, const FlowRegularityCertificate& cert,
                     const A4Sampler& sampler, std::size_t n_samples, RngStream& rng,
                     const HybridMetric& metric = HybridMetric(1.0));

/// Default box samplers on [lo,hi]^d with t ~ Exp(1) and uniform regimes.
A3Sampler box_sampler_a3(std::size_t dim, double lo, double hi, std::size_t num_regimes);
A4Sampler box_sampler_a4(std::size_t dim, double lo, double hi, std::size_t num_regimes);

}  // namespace pdmp
