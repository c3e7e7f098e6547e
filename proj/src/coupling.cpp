#include "pdmp/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pdmp {

namespace {

void check_nonnegative(const ModelSpec& model, const Vec& y) {
  if (!model.require_nonnegative) return;
  for (double v : y)
    if (v < -1e-9)
      throw std::logic_error("coupling: state left the nonnegative orthant");
}

// Joint residual draw for one coordinate of an IFS jump: weights over (j, theta)
// pairs are pi_row[j] * p[theta] - pimin[j] * pmin[theta], which are exactly the
// per-holding-time leftover after the synchronized branch is removed.
std::pair<int, std::size_t> draw_ifs_residual(const std::vector<double>& pi_row,
                                              const std::vector<double>& pimin,
                                              const std::vector<double>& p,
                                              const std::vector<double>& pmin,
                                              RngStream& rng) {
  const std::size_t nj = pi_row.size(), nt = p.size();
  std::vector<double> w(nj * nt);
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t t = 0; t < nt; ++t) {
      double r = pi_row[j] * p[t] - pimin[j] * pmin[t];
      if (r < -1e-12)
        throw std::logic_error("step_coupled: negative residual weight");
      w[j * nt + t] = std::max(r, 0.0);
    }
  const std::size_t idx = rng.discrete(w);
  return {static_cast<int>(idx / nt), idx % nt};
}

}  // namespace

std::pair<CoupledState, BranchFlag> step_coupled(const ModelSpec& model,
                                                 const JumpRegularityCertificate&,
                                                 const CoupledState& z, RngStream& rng) {
  const double h = rng.exponential(model.lambda);
  const Vec v1 = flow(model.flows, z.x1.regime, h, z.x1.y);
  const Vec v2 = flow(model.flows, z.x2.regime, h, z.x2.y);

  const auto& row1 = model.pi[static_cast<std::size_t>(z.x1.regime)];
  const auto& row2 = model.pi[static_cast<std::size_t>(z.x2.regime)];
  std::vector<double> pimin(row1.size());
  double m = 0.0;
  for (std::size_t j = 0; j < row1.size(); ++j) {
    pimin[j] = std::min(row1[j], row2[j]);
    m += pimin[j];
  }
  const double s_jump = coupled_jump_mass(model.jump, v1, v2);
  const double q = m * s_jump;
  if (q > 1.0 + 1e-12) throw std::logic_error("step_coupled: branch mass exceeds 1");

  CoupledState next;
  next.tau = z.tau + h;

  if (rng.uniform() < q) {
    // Synchronized branch: shared regime target and shared jump map.
    const int jstar = static_cast<int>(rng.discrete(pimin));
    const CoupledJumpOutcome jump = sample_synchronized_jump(model.jump, v1, v2, rng);
    check_nonnegative(model, jump.u1);
    check_nonnegative(model, jump.u2);
    next.x1 = HybridState{jump.u1, jstar};
    next.x2 = HybridState{jump.u2, jstar};
    return {next, BranchFlag::Q};
  }

  if (q >= 1.0 - 1e-15)
    throw std::logic_error("step_coupled: residual branch at full overlap");

  // Residual branch: each coordinate draws (regime, jump) independently from
  // the exact leftover of its own one-step law.
  if (const auto* ifs = std::get_if<FiniteIfsKernel>(&model.jump)) {
    const std::vector<double> p1 = ifs->probs_at(v1);
    const std::vector<double> p2 = ifs->probs_at(v2);
    std::vector<double> pmin(p1.size());
    for (std::size_t t = 0; t < p1.size(); ++t) pmin[t] = std::min(p1[t], p2[t]);
    const auto [j1, t1] = draw_ifs_residual(row1, pimin, p1, pmin, rng);
    const auto [j2, t2] = draw_ifs_residual(row2, pimin, p2, pmin, rng);
    Vec u1 = ifs->maps[t1].apply(v1);
    Vec u2 = ifs->maps[t2].apply(v2);
    check_nonnegative(model, u1);
    check_nonnegative(model, u2);
    next.x1 = HybridState{std::move(u1), j1};
    next.x2 = HybridState{std::move(u2), j2};
    return {next, BranchFlag::R};
  }

  // Burst kernel: the jump law is state-independent (full overlap), so the
  // residual lives entirely in the regime draw; bursts are fresh per coordinate.
  const auto& burst = std::get<AdditiveBurstKernel>(model.jump);
  std::vector<double> r1(row1.size()), r2(row2.size());
  for (std::size_t j = 0; j < row1.size(); ++j) {
    r1[j] = row1[j] - pimin[j];
    r2[j] = row2[j] - pimin[j];
    if (r1[j] < -1e-12 || r2[j] < -1e-12)
      throw std::logic_error("step_coupled: negative residual weight");
    r1[j] = std::max(r1[j], 0.0);
    r2[j] = std::max(r2[j], 0.0);
  }
  const int j1 = static_cast<int>(rng.discrete(r1));
  const int j2 = static_cast<int>(rng.discrete(r2));
  const double th1 = burst.sample_theta(rng);
  const double th2 = burst.sample_theta(rng);
  Vec u1 = v1, u2 = v2;
  for (std::size_t k = 0; k < u1.size(); ++k) {
    u1[k] += th1 * burst.direction[k];
    u2[k] += th2 * burst.direction[k];
  }
  check_nonnegative(model, u1);
  check_nonnegative(model, u2);
  next.x1 = HybridState{std::move(u1), j1};
  next.x2 = HybridState{std::move(u2), j2};
  return {next, BranchFlag::R};
}

CoupledTrace simulate_coupled(const ModelSpec& model,
                              const JumpRegularityCertificate& cert,
                              const HybridState& x1, const HybridState& x2,
                              std::size_t n, RngStream& rng, bool identify_regimes) {
  CoupledTrace trace;
  trace.states.reserve(n + 1);
  trace.branch_flags.reserve(n);
  CoupledState cur{x1, x2, 0.0};
  trace.states.push_back(cur);
  if (x1.regime == x2.regime) trace.kappa = 0;
  for (std::size_t k = 0; k < n; ++k) {
    auto [next, flag] = step_coupled(model, cert, cur, rng);
    cur = next;
    trace.states.push_back(cur);
    trace.branch_flags.push_back(flag);
    if (trace.kappa == kNoCoupling && cur.x1.regime == cur.x2.regime)
      trace.kappa = k + 1;
  }
  if (identify_regimes && trace.kappa != kNoCoupling) {
    for (std::size_t k = trace.kappa + 1; k < trace.states.size(); ++k)
      trace.states[k].x2.regime = trace.states[k].x1.regime;
  }
  return trace;
}

std::pair<HybridState, HybridState> coupled_process_at(const ModelSpec& model,
                                                       const CoupledTrace& trace,
                                                       double t, bool identify_regimes) {
  if (trace.states.empty()) throw HorizonError("coupled_process_at: empty trace");
  if (t < 0.0) throw std::invalid_argument("coupled_process_at: negative time");
  if (t >= trace.states.back().tau && !(t == 0.0 && trace.states.size() == 1))
    throw HorizonError("coupled_process_at: time beyond simulated horizon");
  std::size_t lo = 0, hi = trace.states.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (trace.states[mid].tau <= t)
      lo = mid;
    else
      hi = mid;
  }
  const CoupledState& anchor = trace.states[lo];
  const double dt = t - anchor.tau;
  int i1 = anchor.x1.regime;
  int i2 = anchor.x2.regime;
  if (identify_regimes && trace.kappa != kNoCoupling && lo > trace.kappa) i2 = i1;
  return {HybridState{flow(model.flows, i1, dt, anchor.x1.y), i1},
          HybridState{flow(model.flows, i2, dt, anchor.x2.y), i2}};
}

void write_coupled_trace_csv(std::ostream& os, const CoupledTrace& trace,
                             const HybridMetric& metric) {
  const std::size_t d = trace.states.empty() ? 0 : trace.states.front().x1.dim();
  os << "n,tau";
  for (std::size_t k = 0; k < d; ++k) os << ",y1_" << k;
  os << ",i1";
  for (std::size_t k = 0; k < d; ++k) os << ",y2_" << k;
  os << ",i2,branch,rho_bar\n";
  os.precision(17);
  for (std::size_t n = 0; n < trace.states.size(); ++n) {
    const CoupledState& z = trace.states[n];
    os << n << ',' << z.tau;
    for (double v : z.x1.y) os << ',' << v;
    os << ',' << z.x1.regime;
    for (double v : z.x2.y) os << ',' << v;
    os << ',' << z.x2.regime << ','
       << (n == 0 ? "-" : (trace.branch_flags[n - 1] == BranchFlag::Q ? "Q" : "R"))
       << ',' << truncated_distance(z.x1, z.x2, metric) << '\n';
  }
}

}  // namespace pdmp
