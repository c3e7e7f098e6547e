#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pdmp {

using Vec = std::vector<double>;

/// A point x = (y, i) of the hybrid state space: a coordinate in R^d plus a
/// regime index selecting the active semiflow.
struct HybridState {
  Vec y;
  int regime = 0;

  std::size_t dim() const { return y.size(); }

  friend bool operator==(const HybridState& a, const HybridState& b) {
    return a.regime == b.regime && a.y == b.y;
  }
};

/// Hybrid state augmented with the cumulative jump clock.
struct AugmentedState {
  HybridState x;
  double tau = 0.0;
};

enum class BaseMetric { Euclidean, WeightedL1 };

/// Metric on the hybrid space: base distance on the coordinate part plus a
/// fixed penalty c for differing regimes.
struct HybridMetric {
  double c = 1.0;
  BaseMetric base = BaseMetric::Euclidean;
  Vec l1_weights;  // used only for WeightedL1; empty means all-ones

  HybridMetric() = default;
  explicit HybridMetric(double c_, BaseMetric base_ = BaseMetric::Euclidean,
                        Vec l1_weights_ = {})
      : c(c_), base(base_), l1_weights(std::move(l1_weights_)) {
    if (!(c > 0.0)) throw std::invalid_argument("HybridMetric: c must be positive");
  }
};

inline double base_distance(const Vec& u, const Vec& v, const HybridMetric& m) {
  if (u.size() != v.size())
    throw std::invalid_argument("base_distance: dimension mismatch");
  if (m.base == BaseMetric::Euclidean) {
    double s = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const double d = u[k] - v[k];
      s += d * d;
    }
    return std::sqrt(s);
  }
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double w = m.l1_weights.empty() ? 1.0 : m.l1_weights.at(k);
    s += w * std::abs(u[k] - v[k]);
  }
  return s;
}

/// rho_{X,c}(x1,x2) = rho_Y(y1,y2) + c [i1 != i2].
inline double hybrid_distance(const HybridState& x1, const HybridState& x2,
                              const HybridMetric& m) {
  const double dy = base_distance(x1.y, x2.y, m);
  return dy + (x1.regime != x2.regime ? m.c : 0.0);
}

/// Standard bounded metric: rho_{X,c} truncated at 1.
inline double truncated_distance(const HybridState& x1, const HybridState& x2,
                                 const HybridMetric& m) {
  return std::min(hybrid_distance(x1, x2, m), 1.0);
}

/// V(y,i) = rho_Y(y, y*); independent of the regime.
inline double lyapunov_V(const HybridState& x, const Vec& ystar,
                         const HybridMetric& m = HybridMetric(1.0)) {
  return base_distance(x.y, ystar, m);
}

/// Weighted finite point set on X; weights are normalized at construction.
struct EmpiricalMeasure {
  std::vector<std::pair<HybridState, double>> atoms;

  EmpiricalMeasure() = default;

  explicit EmpiricalMeasure(std::vector<std::pair<HybridState, double>> atoms_)
      : atoms(std::move(atoms_)) {
    if (atoms.empty()) throw std::invalid_argument("EmpiricalMeasure: no atoms");
    double total = 0.0;
    for (const auto& [x, w] : atoms) {
      if (!(w > 0.0)) throw std::invalid_argument("EmpiricalMeasure: weights must be positive");
      total += w;
    }
    for (auto& [x, w] : atoms) w /= total;
  }

  /// Uniform weights over the given states.
  static EmpiricalMeasure uniform(const std::vector<HybridState>& states) {
    std::vector<std::pair<HybridState, double>> a;
    a.reserve(states.size());
    for (const auto& s : states) a.emplace_back(s, 1.0);
    return EmpiricalMeasure(std::move(a));
  }
};

}  // namespace pdmp
