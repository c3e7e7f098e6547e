#include "pdmp/semiflow.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdmp {

std::size_t SemiflowSpec::dim() const {
  if (kind == Kind::AffineContraction) {
    if (affine.empty()) throw std::invalid_argument("SemiflowSpec: no regimes");
    return affine.front().fixed_point.size();
  }
  return ode_dim_;
}

SemiflowSpec SemiflowSpec::affine_contractions(std::vector<AffineFlow> flows) {
  if (flows.empty()) throw std::invalid_argument("SemiflowSpec: no regimes");
  const std::size_t d = flows.front().fixed_point.size();
  for (const auto& f : flows)
    if (f.fixed_point.size() != d)
      throw std::invalid_argument("SemiflowSpec: inconsistent dimensions");
  SemiflowSpec s;
  s.kind = Kind::AffineContraction;
  s.affine = std::move(flows);
  return s;
}

SemiflowSpec SemiflowSpec::integrated(std::vector<OdeFlow> fields, std::size_t dim,
                                      double h_int) {
  if (fields.empty()) throw std::invalid_argument("SemiflowSpec: no regimes");
  if (!(h_int > 0.0)) throw std::invalid_argument("SemiflowSpec: h_int must be positive");
  SemiflowSpec s;
  s.kind = Kind::IntegratedOde;
  s.ode = std::move(fields);
  s.h_int = h_int;
  s.ode_dim_ = dim;
  return s;
}

namespace {

Vec rk4_integrate(const OdeFlow& f, double t, Vec y, double h) {
  Vec k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());
  double remaining = t;
  while (remaining > 0.0) {
    const double step = std::min(h, remaining);
    f.field(y, k1);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
    f.field(tmp, k2);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
    f.field(tmp, k3);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + step * k3[i];
    f.field(tmp, k4);
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    remaining -= step;
  }
  return y;
}

}  // namespace

Vec flow(const SemiflowSpec& spec, int regime, double t, const Vec& y) {
  if (t < 0.0) throw std::invalid_argument("flow: negative time");
  if (regime < 0 || static_cast<std::size_t>(regime) >= spec.num_regimes())
    throw std::invalid_argument("flow: regime out of range");
  if (spec.kind == SemiflowSpec::Kind::AffineContraction) {
    const AffineFlow& f = spec.affine[static_cast<std::size_t>(regime)];
    if (y.size() != f.fixed_point.size())
      throw std::invalid_argument("flow: dimension mismatch");
    const double decay = std::exp(f.alpha * t);
    Vec out(y.size());
    for (std::size_t k = 0; k < y.size(); ++k)
      out[k] = decay * (y[k] - f.fixed_point[k]) + f.fixed_point[k];
    return out;
  }
  return rk4_integrate(spec.ode[static_cast<std::size_t>(regime)], t, y, spec.h_int);
}

double PhiFunction::operator()(double t) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Linear:
      return scale * t;
    case Kind::ExpSaturating:
      return scale * (1.0 - std::exp(rate * t));
    case Kind::DiffExp:
      return std::abs(std::exp(-k1 * t) - std::exp(-k2 * t));
    case Kind::Custom:
      return custom(t);
  }
  return 0.0;
}

PhiFunction PhiFunction::linear(double scale) {
  PhiFunction p;
  p.kind = Kind::Linear;
  p.scale = scale;
  return p;
}

PhiFunction PhiFunction::exp_saturating(double scale, double rate) {
  PhiFunction p;
  p.kind = Kind::ExpSaturating;
  p.scale = scale;
  p.rate = rate;
  return p;
}

PhiFunction PhiFunction::diff_exp(double k1, double k2) {
  PhiFunction p;
  p.kind = Kind::DiffExp;
  p.k1 = k1;
  p.k2 = k2;
  return p;
}

PhiFunction PhiFunction::custom_fn(std::function<double(double)> f) {
  PhiFunction p;
  p.kind = Kind::Custom;
  p.custom = std::move(f);
  return p;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (!std::isfinite(left) || !std::isfinite(right))
    throw std::domain_error("K_phi: integrand is not finite");
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_exp_weighted(const std::function<double(double)>& phi, double lambda,
                              double rel_tol) {
  // Truncate where the integrand is negligible; verify the tail is decaying.
  auto g = [&](double t) { return std::exp(-lambda * t) * phi(t); };
  double T = 1.0;
  double rough = 0.0;
  for (int iter = 0; iter < 60; ++iter) {
    const double tail_scale = std::abs(g(T));
    if (!std::isfinite(tail_scale))
      throw std::domain_error("K_phi: integral does not appear to converge");
    rough = std::max(rough, tail_scale * T);
    if (tail_scale <= 1e-16 * std::max(rough, 1.0)) break;
    if (iter == 59 || T > 1e6)
      throw std::domain_error("K_phi: integral does not appear to converge");
    T *= 2.0;
  }
  const double fa = g(0.0), fb = g(T), fm = g(0.5 * T);
  const double whole = T / 6.0 * (fa + 4.0 * fm + fb);
  const double abs_tol = std::max(std::abs(whole), 1e-6) * rel_tol;
  return adaptive_simpson(g, 0.0, T, fa, fm, fb, whole, abs_tol, 48);
}

}  // namespace

double K_phi(const FlowRegularityCertificate& cert, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("K_phi: lambda must be positive");
  const PhiFunction& phi = cert.phi;
  switch (phi.kind) {
    case PhiFunction::Kind::Zero:
      return 0.0;
    case PhiFunction::Kind::Linear:
      return phi.scale / (lambda * lambda);
    case PhiFunction::Kind::ExpSaturating: {
      if (phi.rate >= lambda)
        throw std::domain_error("K_phi: divergent integral (rate >= lambda)");
      // scale * (1/lambda - 1/(lambda - rate))
      return phi.scale * (1.0 / lambda - 1.0 / (lambda - phi.rate));
    }
    case PhiFunction::Kind::DiffExp: {
      const double lo = std::min(phi.k1, phi.k2), hi = std::max(phi.k1, phi.k2);
      if (lambda + lo <= 0.0)
        throw std::domain_error("K_phi: divergent integral (lambda + k <= 0)");
      return 1.0 / (lambda + lo) - 1.0 / (lambda + hi);
    }
    case PhiFunction::Kind::Custom:
      return integrate_exp_weighted(phi.custom, lambda, 1e-10);
  }
  return 0.0;
}

CheckReport check_A3(const SemiflowSpec& spec, const FlowRegularityCertificate& cert,
                     const A3Sampler& sampler, std::size_t n_pairs, RngStream& rng,
                     const HybridMetric& metric) {
  if (n_pairs < 1) throw std::invalid_argument("check_A3: n_pairs must be >= 1");
  CheckReport rep;
  rep.exact_certificate = cert.exact && spec.kind == SemiflowSpec::Kind::AffineContraction;
  for (std::size_t n = 0; n < n_pairs; ++n) {
    const A3Sample s = sampler(rng);
    const double denom_dist = base_distance(s.u, s.v, metric);
    if (denom_dist == 0.0) {
      ++rep.n_skipped;
      continue;
    }
    const Vec su = flow(spec, s.regime, s.t, s.u);
    const Vec sv = flow(spec, s.regime, s.t, s.v);
    const double num = base_distance(su, sv, metric);
    const double bound = cert.L * std::exp(cert.alpha * s.t) * denom_dist;
    rep.worst_ratio = std::max(rep.worst_ratio, num / bound);
    ++rep.n_samples;
  }
  rep.pass = rep.worst_ratio <= 1.0 + 1e-9;
  if (!rep.exact_certificate) rep.note = "integrated flow: sampled check only";
  return rep;
}

CheckReport check_A4(const SemiflowSpec& spec, const FlowRegularityCertificate& cert,
                     const A4Sampler& sampler, std::size_t n_samples, RngStream& rng,
                     const HybridMetric& metric) {
  if (n_samples < 1) throw std::invalid_argument("check_A4: n_samples must be >= 1");
  CheckReport rep;
  rep.exact_certificate = cert.exact && spec.kind == SemiflowSpec::Kind::AffineContraction;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const A4Sample s = sampler(rng);
    const Vec si = flow(spec, s.regime_i, s.t, s.y);
    const Vec sj = flow(spec, s.regime_j, s.t, s.y);
    const double num = base_distance(si, sj, metric);
    const double bound = cert.phi(s.t) * cert.eval_Lfun(s.y);
    if (bound == 0.0) {
      if (num > 1e-12) {
        rep.worst_ratio = std::numeric_limits<double>::infinity();
        ++rep.n_samples;
      } else {
        ++rep.n_skipped;
      }
      continue;
    }
    rep.worst_ratio = std::max(rep.worst_ratio, num / bound);
    ++rep.n_samples;
  }
  rep.pass = rep.worst_ratio <= 1.0 + 1e-9;
  if (!rep.exact_certificate) rep.note = "integrated flow: sampled check only";
  return rep;
}

A3Sampler box_sampler_a3(std::size_t dim, double lo, double hi, std::size_t num_regimes) {
  return [=](RngStream& rng) {
    A3Sample s;
    s.u.resize(dim);
    s.v.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      s.u[k] = lo + (hi - lo) * rng.uniform();
      s.v[k] = lo + (hi - lo) * rng.uniform();
    }
    s.t = rng.exponential(1.0);
    s.regime = static_cast<int>(rng.next_u64() % num_regimes);
    return s;
  };
}

A4Sampler box_sampler_a4(std::size_t dim, double lo, double hi, std::size_t num_regimes) {
  return [=](RngStream& rng) {
    A4Sample s;
    s.y.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) s.y[k] = lo + (hi - lo) * rng.uniform();
    s.t = rng.exponential(1.0);
    s.regime_i = static_cast<int>(rng.next_u64() % num_regimes);
    s.regime_j = static_cast<int>(rng.next_u64() % num_regimes);
    return s;
  };
}

}  // namespace pdmp
