#include "doctest.h"

#include <cmath>

#include "pdmp/analysis.hpp"
#include "pdmp/models.hpp"

using namespace pdmp;

namespace {

// single regime, contraction toward 0, identity jump
PresetBundle identity_jump_model() {
  PresetBundle b;
  b.model.flows = SemiflowSpec::affine_contractions({AffineFlow{-1.0, Vec{0.0}}});
  FiniteIfsKernel k;
  k.maps = {AffineMap{{1.0}, Vec{0.0}}};
  k.probs = [](const Vec&) { return std::vector<double>{1.0}; };
  b.model.jump = std::move(k);
  b.model.pi = {{1.0}};
  b.model.lambda = 1.0;
  b.model.ystar = {0.0};
  b.model.metric = HybridMetric(1.0);
  b.flow_cert.L = 1.0;
  b.flow_cert.alpha = -1.0;
  b.flow_cert.phi = PhiFunction::zero();
  b.jump_cert = JumpRegularityCertificate{1.0, 0.0, 0.0, 1.0, Vec{0.0}};
  b.constants = compute_constants(b.model, b.flow_cert, b.jump_cert);
  return b;
}

}  // namespace

TEST_CASE("constants from certified inputs") {
  PresetBundle b = identity_jump_model();
  b.jump_cert.a_tilde = 0.5;
  const ConstantsReport r = compute_constants(b.model, b.flow_cert, b.jump_cert);
  CHECK(r.a == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.t0 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.hypotheses_ok);
}

TEST_CASE("t0 at and near a flat flow rate") {
  PresetBundle b = identity_jump_model();
  b.model.lambda = 2.0;
  b.flow_cert.alpha = 0.0;
  b.model.flows = SemiflowSpec::affine_contractions({AffineFlow{0.0, Vec{0.0}}});
  CHECK(compute_constants(b.model, b.flow_cert, b.jump_cert).t0 ==
        doctest::Approx(0.5).epsilon(1e-12));
  for (double eps : {1e-6, -1e-6}) {
    b.flow_cert.alpha = eps;
    const double t0 = compute_constants(b.model, b.flow_cert, b.jump_cert).t0;
    CHECK(std::abs(t0 - 0.5) <= 1e-5);
  }
}

TEST_CASE("contraction factor stays below one on admissible inputs") {
  RngStream rng(1, 0);
  PresetBundle b = identity_jump_model();
  for (int rep = 0; rep < 100; ++rep) {
    const double lambda = 0.2 + 3.0 * rng.uniform();
    const double L = 0.5 + 1.5 * rng.uniform();
    const double alpha = -3.0 * rng.uniform();
    double a_tilde = rng.uniform() * (1.0 - alpha / lambda) / L;
    if (a_tilde <= 0.0) a_tilde = 0.01;
    // inputs satisfy a~ L + alpha/lambda < 1 by construction
    b.model.lambda = lambda;
    b.model.flows = SemiflowSpec::affine_contractions({AffineFlow{alpha, Vec{0.0}}});
    b.flow_cert.alpha = alpha;
    b.flow_cert.L = L;
    b.jump_cert.a_tilde = a_tilde;
    const ConstantsReport r = compute_constants(b.model, b.flow_cert, b.jump_cert);
    CHECK(r.a < 1.0);
  }
}

TEST_CASE("constants error handling") {
  PresetBundle b = identity_jump_model();
  b.flow_cert.alpha = 2.0;  // above lambda
  CHECK_THROWS_AS(compute_constants(b.model, b.flow_cert, b.jump_cert),
                  std::domain_error);
  b = identity_jump_model();
  b.jump_cert.a_tilde = 3.0;  // a >= 1: flagged, not thrown
  const ConstantsReport r = compute_constants(b.model, b.flow_cert, b.jump_cert);
  CHECK_FALSE(r.hypotheses_ok);
  CHECK(r.a >= 1.0);
}

TEST_CASE("drift bound at a sharp point") {
  // identity jump, single flow toward 0: E V(next) = V(x) E e^{-h} = V(x)/2
  const PresetBundle b = identity_jump_model();
  CHECK(b.constants.a == doctest::Approx(0.5));
  CHECK(b.constants.b == doctest::Approx(0.0));
  const LyapunovReport rep =
      lyapunov_check(b.model, b.constants, {HybridState{{4.0}, 0}}, 40000, 2);
  CHECK(rep.pass);
  CHECK(rep.points[0].bound == doctest::Approx(2.0));
  CHECK(rep.points[0].estimate == doctest::Approx(2.0).epsilon(0.05));
  // from the anchor itself the bound reduces to b
  const LyapunovReport at0 =
      lyapunov_check(b.model, b.constants, {HybridState{{0.0}, 0}}, 1000, 3);
  CHECK(at0.pass);
  CHECK(at0.points[0].estimate <= at0.points[0].bound + 3.0 * at0.points[0].se + 1e-12);
}

TEST_CASE("drift falsifier: halved contraction factor fails") {
  const PresetBundle b = identity_jump_model();
  ConstantsReport wrong = b.constants;
  wrong.a *= 0.5;
  const LyapunovReport rep =
      lyapunov_check(b.model, wrong, {HybridState{{4.0}, 0}}, 40000, 2);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("chain contraction estimate on the gene preset") {
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  const std::vector<StatePair> pairs{{HybridState{{0.0}, 0}, HybridState{{3.0}, 1}}};
  const RateEstimate est =
      estimate_chain_contraction(b.model, b.jump_cert, pairs, 20, 2000, 5);
  CHECK(est.rate > 0.0);
  CHECK(est.rate < 0.95);
  CHECK(est.r_squared > 0.9);
  CHECK(est.n_points >= 5);
  CHECK(est.grid.size() == 21);
}

TEST_CASE("synchronized single-flow pair decays at the closed-form rate") {
  // equal degradation rates, same regime, shared bursts: rho_n = rho_0 e^{-sum h}
  // so the per-step factor is E e^{-h} = lambda/(lambda - alpha) = 1/2
  PresetOverrides ov;
  ov.k2 = 1.0;  // k1 = k2 = 1
  const PresetBundle b = build_preset(PresetId::GeneExpression, ov);
  const std::vector<StatePair> pairs{{HybridState{{0.0}, 0}, HybridState{{0.9}, 0}}};
  const RateEstimate est =
      estimate_chain_contraction(b.model, b.jump_cert, pairs, 10, 4000, 6);
  CHECK(est.rate == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("degenerate start yields a window error") {
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  const std::vector<StatePair> same{{HybridState{{1.0}, 0}, HybridState{{1.0}, 0}}};
  CHECK_THROWS_AS(estimate_chain_contraction(b.model, b.jump_cert, same, 10, 200, 7),
                  WindowError);
  CHECK_THROWS_AS(
      estimate_process_decay(b.model, b.jump_cert, same,
                             {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, 200, 7, true),
      WindowError);
}

TEST_CASE("process decay estimate is positive and stable") {
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  const std::vector<StatePair> pairs{{HybridState{{0.0}, 0}, HybridState{{3.0}, 1}}};
  std::vector<double> grid;
  for (double t = 1.0; t <= 10.0; t += 1.0) grid.push_back(t);
  const RateEstimate est =
      estimate_process_decay(b.model, b.jump_cert, pairs, grid, 2000, 8, true);
  CHECK(est.rate > 0.0);
  CHECK(est.r_squared > 0.9);
  const RateEstimate est2 =
      estimate_process_decay(b.model, b.jump_cert, pairs, grid, 4000, 8, true);
  CHECK(std::abs(est2.rate - est.rate) / est.rate < 0.2);
  // raw (non-identified) mode also decays here
  const RateEstimate raw =
      estimate_process_decay(b.model, b.jump_cert, pairs, grid, 2000, 8, false);
  CHECK(raw.rate > 0.0);
}

TEST_CASE("stationarity exchange on a point-mass fixed point") {
  // identity jump, single regime: everything collapses to the flow fixed point
  const PresetBundle b = identity_jump_model();
  const CorrespondenceReport rep =
      invariant_correspondence_test(b.model, 200, 500, 30.0, 500, 9, 10);
  CHECK(rep.fm_phi_g_vs_psi < 1e-6);
  CHECK(rep.fm_psi_w_vs_phi < 1e-6);
  CHECK(rep.self_distance < 1e-6);
}

TEST_CASE("stationarity exchange on the gene preset") {
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  const CorrespondenceReport rep =
      invariant_correspondence_test(b.model, 200, 2000, 30.0, 2000, 10, 20);
  CHECK(rep.fm_phi_g_vs_psi < 0.1);
  CHECK(rep.fm_psi_w_vs_phi < 0.1);
  CHECK(rep.self_distance > 0.0);
  CHECK(rep.ci_phi_g_lo <= rep.ci_phi_g_hi);
}

TEST_CASE("one-step jump drift check") {
  const PresetBundle idm = identity_jump_model();
  const CheckOutcome exact = check_A1(idm.model, idm.jump_cert,
                                      box_point_sampler(1, -3.0, 3.0), 100, 11);
  CHECK(exact.pass);
  CHECK(std::abs(exact.worst) <= 1e-12);  // identity jump: equality

  const PresetBundle gene = build_preset(PresetId::GeneExpression);
  const CheckOutcome burst = check_A1(gene.model, gene.jump_cert,
                                      box_point_sampler(1, 0.0, 5.0), 100, 11);
  CHECK(burst.pass);

  JumpRegularityCertificate wrong = gene.jump_cert;
  wrong.b_tilde *= 0.5;
  const CheckOutcome bad =
      check_A1(gene.model, wrong, box_point_sampler(1, 0.0, 5.0), 100, 11);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("displacement integral and common-regime column") {
  const PresetBundle gene = build_preset(PresetId::GeneExpression);
  const std::vector<CheckOutcome> ok = check_A2_A5(gene.model);
  REQUIRE(ok.size() == 2);
  CHECK(ok[0].name == "A2");
  CHECK(ok[0].pass);
  CHECK(ok[1].name == "A5");
  CHECK(ok[1].pass);
  CHECK(ok[1].worst == doctest::Approx(0.5));

  ModelSpec iso = gene.model;
  iso.pi = {{1.0, 0.0}, {0.0, 1.0}};
  const std::vector<CheckOutcome> bad = check_A2_A5(iso);
  CHECK_FALSE(bad[1].pass);
  CHECK(bad[1].worst == 0.0);
}

TEST_CASE("reports round-trip through JSON") {
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  const ConstantsReport c2 = constants_from_json(to_json(b.constants));
  CHECK(c2.a == b.constants.a);
  CHECK(c2.c_min == b.constants.c_min);
  CHECK(c2.note == b.constants.note);

  RateEstimate r;
  r.rate = 0.5;
  r.intercept = -0.1;
  r.r_squared = 0.99;
  r.n_points = 7;
  r.n_samples = 100;
  r.grid = {0.0, 1.0};
  r.mean = {1.0, 0.5};
  r.se = {0.01, 0.02};
  const RateEstimate r2 = rate_from_json(to_json(r));
  CHECK(r2.rate == r.rate);
  CHECK(r2.grid == r.grid);
  CHECK(r2.se == r.se);

  CheckOutcome ch{"A5", true, 0.5, 0.0, 2};
  const CheckOutcome ch2 = check_from_json(to_json(ch));
  CHECK(ch2.name == ch.name);
  CHECK(ch2.pass == ch.pass);
  CHECK(ch2.worst == ch.worst);
}
