#include "doctest.h"

#include <cmath>

#include "pdmp/analysis.hpp"
#include "pdmp/models.hpp"

using namespace pdmp;

TEST_CASE("preset names round-trip") {
  for (PresetId id : {PresetId::GeneExpression, PresetId::ExampleTwoFlows,
                      PresetId::IfsPlaceDependent})
    CHECK(preset_from_name(preset_name(id)) == id);
  CHECK_THROWS_AS(preset_from_name("no-such-preset"), std::invalid_argument);
}

TEST_CASE("gene-expression constants are the closed-form values") {
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  CHECK(b.constants.a == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.constants.b == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.constants.R == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(b.constants.M_L == doctest::Approx(8.0).epsilon(1e-12));
  CHECK_FALSE(b.constants.M_L_sampled);
  CHECK(b.constants.M_phi == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(b.constants.K_phi == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(b.constants.t0 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(b.constants.c_min == doctest::Approx(23.0 / 3.0).epsilon(1e-12));
  CHECK(b.constants.hypotheses_ok);
  // metric penalty is the smallest admissible value
  CHECK(b.model.metric.c == doctest::Approx(b.constants.c_min));
}

TEST_CASE("gene-expression long-run coordinate mean is sane") {
  // bursts of mean 1 at rate 1, degradation at rate 1 or 2:
  // the stationary mean lies between the single-regime values 1/2 and 1
  const PresetBundle b = build_preset(PresetId::GeneExpression);
  RngStream rng(1, 0, StreamPurpose::Chain);
  const ChainTrajectory traj = simulate_chain(b.model, HybridState{{1.0}, 0}, 20000, rng);
  double mean = 0.0;
  for (std::size_t n = 500; n < traj.states.size(); ++n) mean += traj.states[n].y[0];
  mean /= static_cast<double>(traj.states.size() - 500);
  CHECK(mean > 0.4);
  CHECK(mean < 2.5);
}

TEST_CASE("every preset satisfies its own certificates") {
  for (PresetId id : {PresetId::GeneExpression, PresetId::ExampleTwoFlows,
                      PresetId::IfsPlaceDependent}) {
    CAPTURE(preset_name(id));
    const PresetBundle b = build_preset(id);
    CHECK(b.constants.hypotheses_ok);

    const double lo = b.model.require_nonnegative ? 0.0 : -3.0;
    const CheckOutcome a1 =
        check_A1(b.model, b.jump_cert, box_point_sampler(1, lo, 3.0), 300, 1);
    CHECK(a1.pass);
    for (const CheckOutcome& c : check_A2_A5(b.model)) CHECK(c.pass);

    RngStream r3(2, 0, StreamPurpose::FlowCheck);
    const CheckReport a3 =
        check_A3(b.model.flows, b.flow_cert,
                 box_sampler_a3(1, lo, 3.0, b.model.num_regimes()), 2000, r3,
                 b.model.metric);
    CHECK(a3.pass);
    RngStream r4(3, 0, StreamPurpose::FlowCheck);
    const CheckReport a4 =
        check_A4(b.model.flows, b.flow_cert,
                 box_sampler_a4(1, lo, 3.0, b.model.num_regimes()), 2000, r4,
                 b.model.metric);
    CHECK(a4.pass);

    RngStream rj(4, 0, StreamPurpose::JumpCheck);
    const JumpHypothesesReport jr = check_jump_hypotheses(
        b.model.jump, b.jump_cert, box_pair_sampler(1, lo, 3.0), 2000, rj,
        b.model.metric);
    CHECK(jr.pass());
  }
}

TEST_CASE("two-flows preset with coincident fixed points has no divergence") {
  PresetOverrides ov;
  ov.r = 0.0;
  const PresetBundle b = build_preset(PresetId::ExampleTwoFlows, ov);
  CHECK(b.constants.K_phi == doctest::Approx(0.0));
  CHECK(b.constants.M_phi == doctest::Approx(0.0));
  // identical flows: the divergence check sees exact zeros on both sides
  RngStream r4(1, 0, StreamPurpose::FlowCheck);
  const CheckReport a4 = check_A4(b.model.flows, b.flow_cert,
                                  box_sampler_a4(1, -2.0, 2.0, 2), 500, r4,
                                  b.model.metric);
  CHECK(a4.pass);
}

TEST_CASE("overrides violating the drift inequality are rejected by name") {
  PresetOverrides ov;
  ov.alpha = 0.5;  // a~ L + alpha/lambda = 1.5
  CHECK_THROWS_WITH_AS(build_preset(PresetId::ExampleTwoFlows, ov),
                       doctest::Contains("a~ L + alpha/lambda < 1"),
                       std::invalid_argument);
  ov.alpha = -0.5;
  CHECK_NOTHROW(build_preset(PresetId::ExampleTwoFlows, ov));

  PresetOverrides bad;
  bad.lambda = -1.0;
  CHECK_THROWS_AS(build_preset(PresetId::GeneExpression, bad), std::invalid_argument);
}

TEST_CASE("metric penalty: default floor and explicit override") {
  PresetOverrides ov;
  ov.c = 12.0;
  const PresetBundle b = build_preset(PresetId::GeneExpression, ov);
  CHECK(b.model.metric.c == doctest::Approx(12.0));

  // the IFS preset has small c_min; the floor at 1 applies
  const PresetBundle ifs = build_preset(PresetId::IfsPlaceDependent);
  CHECK(ifs.model.metric.c == doctest::Approx(std::max(ifs.constants.c_min, 1.0)));
}

TEST_CASE("two-flows displacement envelope matches the flows exactly") {
  const PresetBundle b = build_preset(PresetId::ExampleTwoFlows);
  for (double t : {0.1, 0.5, 2.0}) {
    const Vec s1 = flow(b.model.flows, 0, t, {0.3});
    const Vec s2 = flow(b.model.flows, 1, t, {0.3});
    CHECK(std::abs(s1[0] - s2[0]) == doctest::Approx(b.flow_cert.phi(t)).epsilon(1e-12));
  }
}
