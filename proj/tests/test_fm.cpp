#include "doctest.h"

#include <cmath>

#include "pdmp/fm.hpp"
#include "pdmp/rng.hpp"

using namespace pdmp;

namespace {

HybridState pt(double y, int regime = 0) { return HybridState{{y}, regime}; }

EmpiricalMeasure dirac(double y, int regime = 0) {
  return EmpiricalMeasure::uniform({pt(y, regime)});
}

EmpiricalMeasure random_measure(RngStream& rng, std::size_t n_atoms, double span,
                                int regimes) {
  std::vector<HybridState> states;
  for (std::size_t k = 0; k < n_atoms; ++k)
    states.push_back(pt(span * (2.0 * rng.uniform() - 1.0),
                        static_cast<int>(rng.next_u64() % regimes)));
  return EmpiricalMeasure::uniform(states);
}

// Same points pushed to dimension two so the flow-based solver runs; the
// Euclidean distances are unchanged, so the value must match the chain solver.
EmpiricalMeasure lift(const EmpiricalMeasure& mu) {
  std::vector<std::pair<HybridState, double>> atoms;
  for (const auto& [x, w] : mu.atoms)
    atoms.emplace_back(HybridState{{x.y[0], 0.0}, x.regime}, w);
  return EmpiricalMeasure(std::move(atoms));
}

}  // namespace

TEST_CASE("identical measures have distance zero") {
  RngStream rng(1, 0);
  const EmpiricalMeasure mu = random_measure(rng, 30, 2.0, 2);
  CHECK(fm_distance(mu, mu, HybridMetric(2.0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("two diracs: distance is the ground distance capped at one") {
  CHECK(fm_distance(dirac(0.0), dirac(0.4), HybridMetric(1.0)) == doctest::Approx(0.4));
  CHECK(fm_distance(dirac(0.0), dirac(3.0), HybridMetric(1.0)) == doctest::Approx(1.0));
  // regime penalty contributes
  CHECK(fm_distance(dirac(0.0, 0), dirac(0.0, 1), HybridMetric(0.25)) ==
        doctest::Approx(0.25));
}

TEST_CASE("oracle agrees on tiny instances (both solver routes)") {
  RngStream rng(2, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n_mu = 1 + rng.next_u64() % 2, n_nu = 1 + rng.next_u64() % 2;
    std::vector<HybridState> a, b;
    for (std::size_t k = 0; k < n_mu; ++k) a.push_back(pt(2.0 * rng.uniform(), 0));
    for (std::size_t k = 0; k < n_nu; ++k)
      b.push_back(pt(2.0 * rng.uniform(), static_cast<int>(rng.next_u64() % 2)));
    for (double c : {0.5, 1.5}) {
      const FmProblem p =
          FmProblem::build(EmpiricalMeasure::uniform(a), EmpiricalMeasure::uniform(b),
                           HybridMetric(c));
      CHECK(std::abs(fm_distance(p) - fm_distance_oracle(p)) <= 2e-3);
    }
  }
}

TEST_CASE("oracle refuses large supports") {
  RngStream rng(3, 0);
  const EmpiricalMeasure mu = random_measure(rng, 4, 1.0, 1);
  const EmpiricalMeasure nu = random_measure(rng, 4, 1.0, 1);
  const FmProblem p = FmProblem::build(mu, nu, HybridMetric(1.0));
  CHECK_THROWS_AS(fm_distance_oracle(p), std::invalid_argument);
}

TEST_CASE("chain solver and flow solver agree") {
  RngStream rng(4, 0);
  for (int rep = 0; rep < 40; ++rep) {
    const EmpiricalMeasure mu = random_measure(rng, 12, 2.0, 2);
    const EmpiricalMeasure nu = random_measure(rng, 9, 2.0, 2);
    const HybridMetric m(1.0 + 3.0 * rng.uniform());
    const double via_chain = fm_distance(mu, nu, m);
    const double via_flow = fm_distance(lift(mu), lift(nu), m);
    CHECK(via_chain == doctest::Approx(via_flow).epsilon(1e-9));
  }
}

TEST_CASE("metric axioms on empirical measures") {
  RngStream rng(5, 0);
  const HybridMetric m(1.2);
  for (int rep = 0; rep < 200; ++rep) {
    const EmpiricalMeasure a = random_measure(rng, 5, 1.5, 2);
    const EmpiricalMeasure b = random_measure(rng, 5, 1.5, 2);
    const EmpiricalMeasure c = random_measure(rng, 5, 1.5, 2);
    const double ab = fm_distance(a, b, m), ba = fm_distance(b, a, m);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
    const double ac = fm_distance(a, c, m), cb = fm_distance(c, b, m);
    CHECK(ab <= ac + cb + 1e-8);
  }
}

TEST_CASE("scale cap and total-variation bound") {
  RngStream rng(6, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const EmpiricalMeasure a = random_measure(rng, 8, 10.0, 2);
    const EmpiricalMeasure b = random_measure(rng, 8, 10.0, 2);
    const double d = fm_distance(a, b, HybridMetric(1.0));
    CHECK(d <= 1.0 + 1e-12);
    CHECK(d >= 0.0);
  }
  // shared support: distance bounded by the weight discrepancy
  const std::vector<HybridState> sup{pt(0.0), pt(5.0)};
  const EmpiricalMeasure mu({{sup[0], 0.5}, {sup[1], 0.5}});
  const EmpiricalMeasure nu({{sup[0], 0.3}, {sup[1], 0.7}});
  CHECK(fm_distance(mu, nu, HybridMetric(1.0)) <= 0.4 + 1e-12);
}

TEST_CASE("small shifts vanish monotonically") {
  RngStream rng(7, 0);
  std::vector<HybridState> base;
  for (int k = 0; k < 25; ++k) base.push_back(pt(2.0 * rng.uniform(), k % 2));
  const EmpiricalMeasure mu = EmpiricalMeasure::uniform(base);
  double prev = 2.0;
  for (int mshift : {1, 2, 4, 8}) {
    std::vector<HybridState> shifted = base;
    for (HybridState& x : shifted) x.y[0] += 1.0 / mshift;
    const double d =
        fm_distance(mu, EmpiricalMeasure::uniform(shifted), HybridMetric(1.0));
    CHECK(d <= prev + 1e-12);
    CHECK(d <= 1.0 / mshift + 1e-9);
    prev = d;
  }
}

TEST_CASE("duplicate atoms merge") {
  const EmpiricalMeasure mu({{pt(1.0), 1.0}, {pt(1.0), 1.0}, {pt(0.0), 2.0}});
  const EmpiricalMeasure nu({{pt(1.0), 1.0}, {pt(0.0), 1.0}});
  const FmProblem p = FmProblem::build(mu, nu, HybridMetric(1.0));
  CHECK(p.size() == 2);
  CHECK(fm_distance(p) == doctest::Approx(0.0));
}

TEST_CASE("large one-dimensional instances stay exact against the flow solver") {
  RngStream rng(8, 0);
  const EmpiricalMeasure mu = random_measure(rng, 150, 3.0, 2);
  const EmpiricalMeasure nu = random_measure(rng, 120, 3.0, 2);
  const HybridMetric m(2.0);
  CHECK(fm_distance(mu, nu, m) ==
        doctest::Approx(fm_distance(lift(mu), lift(nu), m)).epsilon(1e-8));
}
