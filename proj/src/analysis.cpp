#include "pdmp/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <thread>

namespace pdmp {

namespace {

// int_0^inf e^{-lambda t} rho(S_i(t, y*), y*) dt. Closed form for affine
// flows; composite Simpson with doubling horizon otherwise.
double discounted_displacement(const ModelSpec& model, int regime) {
  const double lambda = model.lambda;
  if (model.flows.kind == SemiflowSpec::Kind::AffineContraction) {
    const AffineFlow& f = model.flows.affine[static_cast<std::size_t>(regime)];
    if (f.alpha == 0.0) return 0.0;
    if (f.alpha >= lambda)
      throw std::domain_error("discounted displacement diverges: flow rate >= jump rate");
    const double dist = base_distance(model.ystar, f.fixed_point, model.metric);
    // |e^{alpha t} - 1| keeps one sign; the integral is |alpha|/(lambda(lambda-alpha)).
    return std::abs(f.alpha) / (lambda * (lambda - f.alpha)) * dist;
  }
  auto integrand = [&](double t) {
    return std::exp(-lambda * t) *
           base_distance(flow(model.flows, regime, t, model.ystar), model.ystar,
                         model.metric);
  };
  auto simpson = [&](double lo, double hi, std::size_t n) {
    const double h = (hi - lo) / static_cast<double>(n);
    double s = integrand(lo) + integrand(hi);
    for (std::size_t k = 1; k < n; ++k)
      s += integrand(lo + h * static_cast<double>(k)) * (k % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  double total = 0.0, lo = 0.0, seg = 10.0 / lambda;
  for (int block = 0; block < 40; ++block) {
    const double piece = simpson(lo, lo + seg, 512);
    total += piece;
    lo += seg;
    if (std::abs(piece) <= 1e-12 * std::max(total, 1.0)) return total;
  }
  throw std::domain_error("discounted displacement integral did not converge");
}

double phi_sup_on(const PhiFunction& phi, double t0) {
  switch (phi.kind) {
    case PhiFunction::Kind::Zero:
      return 0.0;
    case PhiFunction::Kind::Linear:
    case PhiFunction::Kind::ExpSaturating:
      return phi(t0);  // nondecreasing families
    case PhiFunction::Kind::DiffExp: {
      // |e^{-k1 t} - e^{-k2 t}| rises to an interior peak then decays.
      const double k1 = phi.k1, k2 = phi.k2;
      if (k1 == k2) return 0.0;
      const double tpeak = std::log(k2 / k1) / (k2 - k1);
      return phi(std::min(t0, tpeak));
    }
    case PhiFunction::Kind::Custom: {
      double best = 0.0;
      for (int k = 0; k <= 10000; ++k)
        best = std::max(best, phi(t0 * k / 10000.0));
      return best;
    }
  }
  return 0.0;
}

double halton(std::size_t index, std::size_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

constexpr std::size_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

}  // namespace

ConstantsReport compute_constants(const ModelSpec& model,
                                  const FlowRegularityCertificate& flow_cert,
                                  const JumpRegularityCertificate& jump_cert) {
  ConstantsReport r;
  r.a_tilde = jump_cert.a_tilde;
  r.b_tilde = jump_cert.b_tilde;
  r.L = flow_cert.L;
  r.alpha = flow_cert.alpha;
  r.lambda = model.lambda;
  if (flow_cert.alpha >= model.lambda)
    throw std::domain_error("compute_constants: flow rate alpha must be below jump rate");

  r.a = jump_cert.a_tilde * model.lambda * flow_cert.L / (model.lambda - flow_cert.alpha);
  double max_disp = 0.0;
  for (std::size_t i = 0; i < model.num_regimes(); ++i)
    max_disp = std::max(max_disp, discounted_displacement(model, static_cast<int>(i)));
  r.b = jump_cert.a_tilde * model.lambda * max_disp + jump_cert.b_tilde;

  r.hypotheses_ok = r.a > 0.0 && r.a < 1.0;
  if (!r.hypotheses_ok) {
    r.note = "mean contraction factor a is outside (0,1); dependent constants are not meaningful";
    r.R = 0.0;
  } else {
    r.R = 4.0 * r.b / (1.0 - r.a);
  }

  r.t0 = flow_cert.alpha == 0.0
             ? 1.0 / model.lambda
             : std::log(model.lambda / (model.lambda - flow_cert.alpha)) / flow_cert.alpha;
  r.M_phi = phi_sup_on(flow_cert.phi, r.t0);
  r.K_phi = K_phi(flow_cert, model.lambda);

  if (!flow_cert.Lfun) {
    r.M_L = 1.0;
  } else if (flow_cert.Lfun_ball_sup) {
    r.M_L = flow_cert.Lfun_ball_sup(r.R);
  } else {
    // Sampled supremum over the coordinate ball of radius R, inflated 10%
    // so that the derived penalty errs on the large side.
    const std::size_t d = model.flows.dim();
    double sup = flow_cert.Lfun(model.ystar);
    std::size_t accepted = 0;
    for (std::size_t idx = 1; idx < 1000000 && accepted < 10000; ++idx) {
      Vec y(d);
      for (std::size_t k = 0; k < d; ++k)
        y[k] = model.ystar[k] + r.R * (2.0 * halton(idx, kPrimes[k % 10]) - 1.0);
      if (base_distance(y, model.ystar, model.metric) > r.R) continue;
      ++accepted;
      sup = std::max(sup, flow_cert.Lfun(y));
    }
    r.M_L = 1.1 * sup;
    r.M_L_sampled = true;
    if (!r.note.empty()) r.note += "; ";
    r.note += "M_L is a sampled supremum inflated by 10%";
  }

  r.c_min = (model.lambda - flow_cert.alpha) / flow_cert.L *
                (r.M_L * r.K_phi + r.M_L * r.M_phi / model.lambda) +
            1.0;
  return r;
}

LyapunovReport lyapunov_check(const ModelSpec& model, const ConstantsReport& constants,
                              const std::vector<HybridState>& test_points,
                              std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw std::invalid_argument("lyapunov_check: need n_samples >= 2");
  LyapunovReport rep;
  rep.n_samples = n_samples;
  rep.pass = true;
  for (std::size_t p = 0; p < test_points.size(); ++p) {
    RngStream rng(seed, p, StreamPurpose::Analysis);
    const HybridState& x = test_points[p];
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
      const AugmentedState next = step_chain(model, AugmentedState{x, 0.0}, rng);
      const double v = base_distance(next.x.y, model.ystar, model.metric);
      sum += v;
      sumsq += v * v;
    }
    LyapunovPoint pt;
    pt.x = x;
    pt.V = base_distance(x.y, model.ystar, model.metric);
    pt.bound = constants.a * pt.V + constants.b;
    pt.estimate = sum / static_cast<double>(n_samples);
    const double var =
        std::max(0.0, sumsq / static_cast<double>(n_samples) - pt.estimate * pt.estimate);
    pt.se = std::sqrt(var / static_cast<double>(n_samples));
    pt.pass = pt.estimate <= pt.bound + 3.0 * pt.se;
    rep.pass = rep.pass && pt.pass;
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

namespace {

struct DecayCurve {
  std::vector<double> grid, mean, se;
};

// Unweighted least squares of log(mean) on the grid, restricted to the
// window where the mean clears ten times its standard error.
void fit_decay(const DecayCurve& c, RateEstimate& est) {
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < c.grid.size(); ++k)
    if (c.mean[k] > 0.0 && c.mean[k] > 10.0 * c.se[k]) {
      xs.push_back(c.grid[k]);
      ys.push_back(std::log(c.mean[k]));
    }
  if (xs.size() < 5)
    throw WindowError(
        "rate fit: fewer than 5 grid points clear the noise floor; increase the "
        "initial separation or the sample budget");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
    syy += (ys[k] - my) * (ys[k] - my);
  }
  const double slope = sxy / sxx;
  est.rate = slope;  // callers transform to q-hat or gamma-hat
  est.intercept = my - slope * mx;
  est.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  est.n_points = xs.size();
  est.grid = c.grid;
  est.mean = c.mean;
  est.se = c.se;
}

DecayCurve mean_curve(const std::vector<std::vector<double>>& per_sample,
                      const std::vector<double>& grid) {
  DecayCurve c;
  c.grid = grid;
  const std::size_t m = grid.size();
  const double n = static_cast<double>(per_sample.size());
  c.mean.assign(m, 0.0);
  c.se.assign(m, 0.0);
  for (const auto& row : per_sample)
    for (std::size_t k = 0; k < m; ++k) c.mean[k] += row[k];
  for (double& v : c.mean) v /= n;
  for (const auto& row : per_sample)
    for (std::size_t k = 0; k < m; ++k) {
      const double d = row[k] - c.mean[k];
      c.se[k] += d * d;
    }
  for (double& v : c.se) v = std::sqrt(v / (n * (n - 1.0)));
  return c;
}

}  // namespace

RateEstimate estimate_chain_contraction(const ModelSpec& model,
                                        const JumpRegularityCertificate& cert,
                                        const std::vector<StatePair>& pairs,
                                        std::size_t n_steps, std::size_t n_samples,
                                        std::uint64_t seed) {
  if (n_steps < 5) throw std::invalid_argument("estimate_chain_contraction: n_steps >= 5");
  if (pairs.empty() || n_samples < 2)
    throw std::invalid_argument("estimate_chain_contraction: need pairs and samples");
  std::vector<double> grid(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) grid[k] = static_cast<double>(k);
  std::vector<std::vector<double>> rows(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) {
    RngStream rng(seed, j, StreamPurpose::Coupling);
    const StatePair& pr = pairs[j % pairs.size()];
    const CoupledTrace trace =
        simulate_coupled(model, cert, pr.first, pr.second, n_steps, rng, false);
    rows[j].resize(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k)
      rows[j][k] =
          truncated_distance(trace.states[k].x1, trace.states[k].x2, model.metric);
  }
  RateEstimate est;
  est.n_samples = n_samples;
  fit_decay(mean_curve(rows, grid), est);
  est.rate = std::exp(est.rate);  // per-step factor q-hat
  return est;
}

RateEstimate estimate_process_decay(const ModelSpec& model,
                                    const JumpRegularityCertificate& cert,
                                    const std::vector<StatePair>& pairs,
                                    const std::vector<double>& time_grid,
                                    std::size_t n_samples, std::uint64_t seed,
                                    bool identify_regimes) {
  if (time_grid.size() < 5)
    throw std::invalid_argument("estimate_process_decay: need a grid of >= 5 times");
  if (pairs.empty() || n_samples < 2)
    throw std::invalid_argument("estimate_process_decay: need pairs and samples");
  const double t_max = *std::max_element(time_grid.begin(), time_grid.end());
  std::vector<std::vector<double>> rows(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) {
    RngStream rng(seed, j, StreamPurpose::Coupling);
    const StatePair& pr = pairs[j % pairs.size()];
    CoupledTrace trace;
    CoupledState cur{pr.first, pr.second, 0.0};
    trace.states.push_back(cur);
    if (cur.x1.regime == cur.x2.regime) trace.kappa = 0;
    std::size_t n = 0;
    while (cur.tau <= t_max) {
      auto [next, flag] = step_coupled(model, cert, cur, rng);
      cur = next;
      ++n;
      trace.states.push_back(cur);
      trace.branch_flags.push_back(flag);
      if (trace.kappa == kNoCoupling && cur.x1.regime == cur.x2.regime)
        trace.kappa = n;
    }
    rows[j].reserve(time_grid.size());
    for (double t : time_grid) {
      const auto [p1, p2] = coupled_process_at(model, trace, t, identify_regimes);
      rows[j].push_back(truncated_distance(p1, p2, model.metric));
    }
  }
  RateEstimate est;
  est.n_samples = n_samples;
  fit_decay(mean_curve(rows, time_grid), est);
  est.rate = -est.rate;  // decay exponent gamma-hat
  return est;
}

namespace {

std::vector<HybridState> chain_tail(const ModelSpec& model, const HybridState& x0,
                                    std::size_t burn_in, std::size_t n_stat,
                                    RngStream& rng) {
  std::vector<HybridState> out;
  out.reserve(n_stat);
  AugmentedState cur{x0, 0.0};
  for (std::size_t k = 0; k < burn_in + n_stat; ++k) {
    cur = step_chain(model, cur, rng);
    if (k >= burn_in) out.push_back(cur.x);
  }
  return out;
}

HybridState process_snapshot(const ModelSpec& model, const HybridState& x0, double T,
                             RngStream& rng) {
  AugmentedState cur{x0, 0.0}, prev = cur;
  while (cur.tau <= T) {
    prev = cur;
    cur = step_chain(model, cur, rng);
  }
  return HybridState{flow(model.flows, prev.x.regime, T - prev.tau, prev.x.y),
                     prev.x.regime};
}

std::pair<double, double> bootstrap_ci(const std::vector<HybridState>& mu,
                                       const std::vector<HybridState>& nu,
                                       const HybridMetric& metric, std::size_t n_boot,
                                       std::uint64_t seed, std::uint64_t salt) {
  if (n_boot == 0) return {0.0, 0.0};
  std::vector<double> vals(n_boot);
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futs;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w)
    futs.push_back(std::async(std::launch::async, [&] {
      for (;;) {
        const std::size_t r = next.fetch_add(1);
        if (r >= n_boot) return;
        RngStream rng(seed, salt * 1000003ULL + r, StreamPurpose::Bootstrap);
        std::vector<HybridState> a(mu.size()), b(nu.size());
        for (auto& x : a)
          x = mu[static_cast<std::size_t>(rng.uniform() * static_cast<double>(mu.size()))];
        for (auto& x : b)
          x = nu[static_cast<std::size_t>(rng.uniform() * static_cast<double>(nu.size()))];
        vals[r] = fm_distance(EmpiricalMeasure::uniform(a), EmpiricalMeasure::uniform(b),
                              metric);
      }
    }));
  for (auto& f : futs) f.get();
  std::sort(vals.begin(), vals.end());
  auto pick = [&](double q) {
    const double pos = q * static_cast<double>(n_boot - 1);
    return vals[static_cast<std::size_t>(pos + 0.5)];
  };
  return {pick(0.025), pick(0.975)};
}

}  // namespace

CorrespondenceReport invariant_correspondence_test(const ModelSpec& model,
                                                   std::size_t burn_in,
                                                   std::size_t n_stat, double T,
                                                   std::size_t n_samples,
                                                   std::uint64_t seed,
                                                   std::size_t n_bootstrap) {
  CorrespondenceReport rep;
  rep.n_stat = n_stat;
  rep.n_samples = n_samples;
  rep.n_bootstrap = n_bootstrap;
  const HybridState x0{model.ystar, 0};

  RngStream chain_rng(seed, 1, StreamPurpose::Chain);
  const std::vector<HybridState> phi = chain_tail(model, x0, burn_in, n_stat, chain_rng);
  RngStream chain_rng_b(seed, 2, StreamPurpose::Chain);
  const std::vector<HybridState> phi_b =
      chain_tail(model, x0, burn_in, n_stat, chain_rng_b);

  RngStream g_rng(seed, 3, StreamPurpose::Analysis);
  std::vector<HybridState> phi_g(phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k) phi_g[k] = apply_G(model, phi[k], g_rng);

  std::vector<HybridState> psi(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) {
    RngStream rng(seed, 1000 + j, StreamPurpose::Chain);
    psi[j] = process_snapshot(model, x0, T, rng);
  }
  RngStream w_rng(seed, 4, StreamPurpose::Analysis);
  std::vector<HybridState> psi_w(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) psi_w[k] = apply_W(model, psi[k], w_rng);

  const HybridMetric& m = model.metric;
  rep.fm_phi_g_vs_psi =
      fm_distance(EmpiricalMeasure::uniform(phi_g), EmpiricalMeasure::uniform(psi), m);
  rep.fm_psi_w_vs_phi =
      fm_distance(EmpiricalMeasure::uniform(psi_w), EmpiricalMeasure::uniform(phi), m);
  rep.self_distance =
      fm_distance(EmpiricalMeasure::uniform(phi), EmpiricalMeasure::uniform(phi_b), m);

  std::tie(rep.ci_phi_g_lo, rep.ci_phi_g_hi) =
      bootstrap_ci(phi_g, psi, m, n_bootstrap, seed, 1);
  std::tie(rep.ci_psi_w_lo, rep.ci_psi_w_hi) =
      bootstrap_ci(psi_w, phi, m, n_bootstrap, seed, 2);
  return rep;
}

CheckOutcome check_A1(const ModelSpec& model, const JumpRegularityCertificate& cert,
                      const PointSampler& sampler, std::size_t n, std::uint64_t seed) {
  CheckOutcome out;
  out.name = "A1";
  out.n = n;
  out.pass = true;
  out.worst = -std::numeric_limits<double>::infinity();
  RngStream rng(seed, 0, StreamPurpose::JumpCheck);
  for (std::size_t s = 0; s < n; ++s) {
    const Vec y = sampler(rng);
    double mean = 0.0, se = 0.0;
    if (const auto* ifs = std::get_if<FiniteIfsKernel>(&model.jump)) {
      for (const auto& [u, w] : ifs_jump_atoms(*ifs, y))
        mean += w * base_distance(u, cert.ystar, model.metric);
    } else {
      const std::size_t inner = 256;
      double sum = 0.0, sumsq = 0.0;
      for (std::size_t k = 0; k < inner; ++k) {
        const Vec u = sample_jump(model.jump, y, rng);
        const double v = base_distance(u, cert.ystar, model.metric);
        sum += v;
        sumsq += v * v;
      }
      mean = sum / static_cast<double>(inner);
      const double var =
          std::max(0.0, sumsq / static_cast<double>(inner) - mean * mean);
      se = std::sqrt(var / static_cast<double>(inner));
    }
    const double bound =
        cert.a_tilde * base_distance(y, cert.ystar, model.metric) + cert.b_tilde;
    const double margin = mean - bound;
    if (margin > out.worst) {
      out.worst = margin;
      out.slack = 3.0 * se;
    }
    if (margin > 3.0 * se + 1e-12) out.pass = false;
  }
  return out;
}

std::vector<CheckOutcome> check_A2_A5(const ModelSpec& model) {
  std::vector<CheckOutcome> out;
  CheckOutcome a2;
  a2.name = "A2";
  a2.n = model.num_regimes();
  a2.pass = true;
  a2.worst = 0.0;
  try {
    for (std::size_t i = 0; i < model.num_regimes(); ++i)
      a2.worst = std::max(a2.worst, discounted_displacement(model, static_cast<int>(i)));
  } catch (const std::domain_error&) {
    a2.pass = false;
    a2.worst = std::numeric_limits<double>::infinity();
  }
  out.push_back(a2);

  CheckOutcome a5;
  a5.name = "A5";
  a5.n = model.num_regimes();
  double best = 0.0;
  for (std::size_t j = 0; j < model.num_regimes(); ++j) {
    double colmin = 1.0;
    for (std::size_t i = 0; i < model.num_regimes(); ++i)
      colmin = std::min(colmin, model.pi[i][j]);
    best = std::max(best, colmin);
  }
  a5.worst = best;  // margin of the best common-target column
  a5.pass = best > 0.0;
  out.push_back(a5);
  return out;
}

PointSampler box_point_sampler(std::size_t dim, double lo, double hi) {
  return [=](RngStream& rng) {
    Vec y(dim);
    for (std::size_t k = 0; k < dim; ++k) y[k] = lo + (hi - lo) * rng.uniform();
    return y;
  };
}

// --- JSON serialization ---

nlohmann::json to_json(const ConstantsReport& r) {
  return nlohmann::json{{"a", r.a},
                        {"b", r.b},
                        {"R", r.R},
                        {"M_L", r.M_L},
                        {"M_phi", r.M_phi},
                        {"K_phi", r.K_phi},
                        {"t0", r.t0},
                        {"c_min", r.c_min},
                        {"a_tilde", r.a_tilde},
                        {"b_tilde", r.b_tilde},
                        {"L", r.L},
                        {"alpha", r.alpha},
                        {"lambda", r.lambda},
                        {"hypotheses_ok", r.hypotheses_ok},
                        {"M_L_sampled", r.M_L_sampled},
                        {"note", r.note}};
}

ConstantsReport constants_from_json(const nlohmann::json& j) {
  ConstantsReport r;
  r.a = j.at("a");
  r.b = j.at("b");
  r.R = j.at("R");
  r.M_L = j.at("M_L");
  r.M_phi = j.at("M_phi");
  r.K_phi = j.at("K_phi");
  r.t0 = j.at("t0");
  r.c_min = j.at("c_min");
  r.a_tilde = j.at("a_tilde");
  r.b_tilde = j.at("b_tilde");
  r.L = j.at("L");
  r.alpha = j.at("alpha");
  r.lambda = j.at("lambda");
  r.hypotheses_ok = j.at("hypotheses_ok");
  r.M_L_sampled = j.at("M_L_sampled");
  r.note = j.at("note");
  return r;
}

nlohmann::json to_json(const RateEstimate& r) {
  return nlohmann::json{{"rate", r.rate},         {"intercept", r.intercept},
                        {"r_squared", r.r_squared}, {"n_points", r.n_points},
                        {"n_samples", r.n_samples}, {"grid", r.grid},
                        {"mean", r.mean},           {"se", r.se}};
}

RateEstimate rate_from_json(const nlohmann::json& j) {
  RateEstimate r;
  r.rate = j.at("rate");
  r.intercept = j.at("intercept");
  r.r_squared = j.at("r_squared");
  r.n_points = j.at("n_points");
  r.n_samples = j.at("n_samples");
  r.grid = j.at("grid").get<std::vector<double>>();
  r.mean = j.at("mean").get<std::vector<double>>();
  r.se = j.at("se").get<std::vector<double>>();
  return r;
}

nlohmann::json to_json(const CheckOutcome& r) {
  return nlohmann::json{
      {"name", r.name}, {"pass", r.pass}, {"worst", r.worst}, {"slack", r.slack}, {"n", r.n}};
}

CheckOutcome check_from_json(const nlohmann::json& j) {
  CheckOutcome r;
  r.name = j.at("name");
  r.pass = j.at("pass");
  r.worst = j.at("worst");
  r.slack = j.at("slack");
  r.n = j.at("n");
  return r;
}

nlohmann::json to_json(const LyapunovReport& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const LyapunovPoint& p : r.points)
    pts.push_back({{"y", p.x.y},
                   {"regime", p.x.regime},
                   {"V", p.V},
                   {"bound", p.bound},
                   {"estimate", p.estimate},
                   {"se", p.se},
                   {"pass", p.pass}});
  return nlohmann::json{{"points", pts}, {"n_samples", r.n_samples}, {"pass", r.pass}};
}

nlohmann::json to_json(const CorrespondenceReport& r) {
  return nlohmann::json{{"fm_phi_g_vs_psi", r.fm_phi_g_vs_psi},
                        {"fm_psi_w_vs_phi", r.fm_psi_w_vs_phi},
                        {"ci_phi_g", {r.ci_phi_g_lo, r.ci_phi_g_hi}},
                        {"ci_psi_w", {r.ci_psi_w_lo, r.ci_psi_w_hi}},
                        {"self_distance", r.self_distance},
                        {"n_stat", r.n_stat},
                        {"n_samples", r.n_samples},
                        {"n_bootstrap", r.n_bootstrap}};
}

}  // namespace pdmp
