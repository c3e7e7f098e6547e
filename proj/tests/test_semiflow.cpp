#include "doctest.h"

#include <cmath>

#include "pdmp/semiflow.hpp"

using namespace pdmp;

namespace {

SemiflowSpec two_affine() {
  return SemiflowSpec::affine_contractions(
      {AffineFlow{-1.0, Vec{0.0}}, AffineFlow{-1.0, Vec{1.0}}});
}

}  // namespace

TEST_CASE("affine flow evaluation and semigroup law") {
  const SemiflowSpec spec = two_affine();
  CHECK(flow(spec, 0, 1.0, {2.0})[0] == doctest::Approx(2.0 * std::exp(-1.0)));
  CHECK(flow(spec, 1, 2.0, {3.0})[0] == doctest::Approx(std::exp(-2.0) * 2.0 + 1.0));
  // S(s+t, y) = S(s, S(t, y))
  const Vec a = flow(spec, 1, 0.7 + 1.3, {5.0});
  const Vec b = flow(spec, 1, 0.7, flow(spec, 1, 1.3, {5.0}));
  CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-14));
  // fixed point stays put; t = 0 is the identity
  CHECK(flow(spec, 1, 3.0, {1.0})[0] == doctest::Approx(1.0));
  CHECK(flow(spec, 0, 0.0, {4.0})[0] == doctest::Approx(4.0));
  CHECK_THROWS_AS(flow(spec, 0, -1.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(flow(spec, 5, 1.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(flow(spec, 0, 1.0, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("integrated ODE flow matches the affine closed form") {
  const SemiflowSpec ode = SemiflowSpec::integrated(
      {OdeFlow{[](const Vec& y, Vec& dy) { dy[0] = -(y[0] - 1.0); }}}, 1, 1e-3);
  for (double t : {0.1, 0.5, 2.0}) {
    const double exact = std::exp(-t) * (3.0 - 1.0) + 1.0;
    CHECK(flow(ode, 0, t, {3.0})[0] == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("phi families and discounted integrals") {
  const PhiFunction lin = PhiFunction::linear(2.0);
  CHECK(lin(3.0) == doctest::Approx(6.0));
  const PhiFunction sat = PhiFunction::exp_saturating(1.5, -1.0);
  CHECK(sat(1e9) == doctest::Approx(1.5));
  const PhiFunction de = PhiFunction::diff_exp(1.0, 2.0);
  CHECK(de(std::log(2.0)) == doctest::Approx(0.25));

  FlowRegularityCertificate cert;
  cert.phi = lin;
  CHECK(K_phi(cert, 2.0) == doctest::Approx(0.5));
  cert.phi = sat;
  CHECK(K_phi(cert, 1.0) == doctest::Approx(1.5 * (1.0 - 0.5)));
  cert.phi = de;
  CHECK(K_phi(cert, 1.0) == doctest::Approx(1.0 / 2.0 - 1.0 / 3.0));
  cert.phi = PhiFunction::zero();
  CHECK(K_phi(cert, 1.0) == 0.0);
}

TEST_CASE("custom phi quadrature agrees with closed forms") {
  FlowRegularityCertificate cert;
  cert.phi = PhiFunction::custom_fn(
      [](double t) { return std::abs(std::exp(-t) - std::exp(-2.0 * t)); });
  CHECK(K_phi(cert, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-8));
  cert.phi = PhiFunction::custom_fn([](double t) { return 2.0 * t; });
  CHECK(K_phi(cert, 2.0) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("divergent discounted integrals are reported") {
  FlowRegularityCertificate cert;
  cert.phi = PhiFunction::exp_saturating(1.0, 2.0);
  CHECK_THROWS_AS(K_phi(cert, 1.0), std::domain_error);
  cert.phi = PhiFunction::custom_fn([](double t) { return std::exp(2.0 * t); });
  CHECK_THROWS_AS(K_phi(cert, 1.0), std::domain_error);
}

TEST_CASE("flow contraction check passes with the exact constant") {
  const SemiflowSpec spec = two_affine();
  FlowRegularityCertificate cert;
  cert.L = 1.0;
  cert.alpha = -1.0;
  RngStream rng(1, 0, StreamPurpose::FlowCheck);
  const CheckReport rep = check_A3(spec, cert, box_sampler_a3(1, -3.0, 3.0, 2), 500, rng);
  CHECK(rep.pass);
  CHECK(rep.worst_ratio == doctest::Approx(1.0));
  CHECK(rep.n_samples == 500);
  CHECK(rep.exact_certificate);
}

TEST_CASE("flow contraction falsifier: understated decay fails") {
  const SemiflowSpec spec = two_affine();
  FlowRegularityCertificate cert;
  cert.L = 1.0;
  cert.alpha = -2.0;  // claims faster decay than the flows deliver
  RngStream rng(2, 0, StreamPurpose::FlowCheck);
  const CheckReport rep = check_A3(spec, cert, box_sampler_a3(1, -3.0, 3.0, 2), 500, rng);
  CHECK_FALSE(rep.pass);
  CHECK(rep.worst_ratio > 1.0);
}

TEST_CASE("inter-flow divergence check with the exact envelope") {
  const SemiflowSpec spec = two_affine();
  FlowRegularityCertificate cert;
  cert.alpha = -1.0;
  cert.phi = PhiFunction::exp_saturating(1.0, -1.0);  // |r| (1 - e^{-t}), r = 1
  RngStream rng(3, 0, StreamPurpose::FlowCheck);
  const CheckReport rep = check_A4(spec, cert, box_sampler_a4(1, -3.0, 3.0, 2), 500, rng);
  CHECK(rep.pass);
  CHECK(rep.worst_ratio <= 1.0 + 1e-9);

  // halving the envelope must fail
  cert.phi = PhiFunction::exp_saturating(0.5, -1.0);
  RngStream rng2(3, 0, StreamPurpose::FlowCheck);
  const CheckReport bad = check_A4(spec, cert, box_sampler_a4(1, -3.0, 3.0, 2), 500, rng2);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("identical flows give zero divergence (phi = 0 passes)") {
  const SemiflowSpec spec = SemiflowSpec::affine_contractions(
      {AffineFlow{-1.0, Vec{0.0}}, AffineFlow{-1.0, Vec{0.0}}});
  FlowRegularityCertificate cert;
  cert.phi = PhiFunction::zero();
  RngStream rng(4, 0, StreamPurpose::FlowCheck);
  const CheckReport rep = check_A4(spec, cert, box_sampler_a4(1, -3.0, 3.0, 2), 200, rng);
  CHECK(rep.pass);
  CHECK(rep.worst_ratio == 0.0);
}
