#include "pdmp/pdmp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace pdmp {

void ModelSpec::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("ModelSpec: lambda must be positive");
  if (pi.empty()) throw std::invalid_argument("ModelSpec: empty switching matrix");
  if (pi.size() != flows.num_regimes())
    throw std::invalid_argument("ModelSpec: regime count mismatch between pi and flows");
  for (const auto& row : pi) {
    if (row.size() != pi.size())
      throw std::invalid_argument("ModelSpec: pi must be square");
    double s = 0.0;
    for (double v : row) {
      if (v < 0.0) throw std::invalid_argument("ModelSpec: negative pi entry");
      s += v;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw std::invalid_argument("ModelSpec: pi row does not sum to 1");
  }
  if (ystar.size() != flows.dim())
    throw std::invalid_argument("ModelSpec: ystar dimension mismatch");
  if (jump_dim(jump) != flows.dim())
    throw std::invalid_argument("ModelSpec: jump kernel dimension mismatch");
}

namespace {

void check_nonnegative(const ModelSpec& model, const Vec& y) {
  if (!model.require_nonnegative) return;
  for (double v : y)
    if (v < -1e-9)
      throw std::logic_error("ModelSpec: state left the nonnegative orthant");
}

}  // namespace

AugmentedState step_chain(const ModelSpec& model, const AugmentedState& state,
                          RngStream& rng) {
  const double h = rng.exponential(model.lambda);
  const Vec v = flow(model.flows, state.x.regime, h, state.x.y);
  Vec yp = sample_jump(model.jump, v, rng);
  const auto& row = model.pi[static_cast<std::size_t>(state.x.regime)];
  const int j = static_cast<int>(rng.discrete(row));
  check_nonnegative(model, yp);
  return AugmentedState{HybridState{std::move(yp), j}, state.tau + h};
}

ChainTrajectory simulate_chain(const ModelSpec& model, const HybridState& x0,
                               std::size_t n, RngStream& rng) {
  ChainTrajectory traj;
  traj.states.reserve(n + 1);
  traj.jump_times.reserve(n + 1);
  AugmentedState cur{x0, 0.0};
  traj.states.push_back(cur.x);
  traj.jump_times.push_back(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cur = step_chain(model, cur, rng);
    traj.states.push_back(cur.x);
    traj.jump_times.push_back(cur.tau);
  }
  return traj;
}

HybridState process_at(const ModelSpec& model, const ChainTrajectory& traj, double t) {
  if (traj.jump_times.empty()) throw HorizonError("process_at: empty trajectory");
  if (t < 0.0) throw std::invalid_argument("process_at: negative time");
  if (t >= traj.jump_times.back())
    throw HorizonError("process_at: time beyond simulated horizon");
  // n = max{ n : tau_n <= t }
  const auto it = std::upper_bound(traj.jump_times.begin(), traj.jump_times.end(), t);
  const std::size_t n = static_cast<std::size_t>(it - traj.jump_times.begin()) - 1;
  const HybridState& anchor = traj.states[n];
  const double dt = t - traj.jump_times[n];
  return HybridState{flow(model.flows, anchor.regime, dt, anchor.y), anchor.regime};
}

HybridState apply_G(const ModelSpec& model, const HybridState& x, RngStream& rng) {
  const double t = rng.exponential(model.lambda);
  return HybridState{flow(model.flows, x.regime, t, x.y), x.regime};
}

HybridState apply_W(const ModelSpec& model, const HybridState& x, RngStream& rng) {
  Vec yp = sample_jump(model.jump, x.y, rng);
  const auto& row = model.pi[static_cast<std::size_t>(x.regime)];
  const int j = static_cast<int>(rng.discrete(row));
  check_nonnegative(model, yp);
  return HybridState{std::move(yp), j};
}

void write_trajectory_csv(std::ostream& os, const ChainTrajectory& traj) {
  const std::size_t d = traj.states.empty() ? 0 : traj.states.front().dim();
  os << "n,tau";
  for (std::size_t k = 0; k < d; ++k) os << ",y_" << k;
  os << ",regime\n";
  os.precision(17);
  for (std::size_t n = 0; n < traj.states.size(); ++n) {
    os << n << ',' << traj.jump_times[n];
    for (double v : traj.states[n].y) os << ',' << v;
    os << ',' << traj.states[n].regime << '\n';
  }
}

}  // namespace pdmp
