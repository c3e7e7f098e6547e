#include "pdmp/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pdmp {

PresetId preset_from_name(const std::string& name) {
  if (name == "gene-expression") return PresetId::GeneExpression;
  if (name == "example-two-flows") return PresetId::ExampleTwoFlows;
  if (name == "ifs-place-dependent") return PresetId::IfsPlaceDependent;
  throw std::invalid_argument("unknown preset: " + name);
}

std::string preset_name(PresetId id) {
  switch (id) {
    case PresetId::GeneExpression:
      return "gene-expression";
    case PresetId::ExampleTwoFlows:
      return "example-two-flows";
    case PresetId::IfsPlaceDependent:
      return "ifs-place-dependent";
  }
  return "?";
}

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

void check_admissible(const FlowRegularityCertificate& fc,
                      const JumpRegularityCertificate& jc, double lambda) {
  const double lhs = jc.a_tilde * fc.L + fc.alpha / lambda;
  if (!(lhs < 1.0)) {
    std::ostringstream os;
    os << "override rejected: requires a~ L + alpha/lambda < 1, got " << lhs;
    throw std::invalid_argument(os.str());
  }
  if (!(fc.alpha < lambda))
    throw std::invalid_argument("override rejected: requires alpha < lambda");
}

PresetBundle finish(PresetBundle b, const PresetOverrides& ov) {
  check_admissible(b.flow_cert, b.jump_cert, b.model.lambda);
  b.model.metric = HybridMetric(1.0);
  b.constants = compute_constants(b.model, b.flow_cert, b.jump_cert);
  double c = std::max(b.constants.c_min, 1.0);
  if (ov.c) {
    require_positive(*ov.c, "c");
    c = *ov.c;
  }
  b.model.metric = HybridMetric(c);
  b.model.validate();
  return b;
}

PresetBundle gene_expression(const PresetOverrides& ov) {
  const double k1 = ov.k1.value_or(1.0), k2 = ov.k2.value_or(2.0);
  const double beta = ov.burst_mean.value_or(1.0);
  const double lambda = ov.lambda.value_or(1.0);
  require_positive(k1, "k1");
  require_positive(k2, "k2");
  require_positive(beta, "burst_mean");
  require_positive(lambda, "lambda");

  PresetBundle b;
  b.model.flows = SemiflowSpec::affine_contractions(
      {AffineFlow{-k1, Vec{0.0}}, AffineFlow{-k2, Vec{0.0}}});
  b.model.jump = AdditiveBurstKernel{AdditiveBurstKernel::ExponentialLaw{beta}, Vec{1.0}};
  b.model.pi = {{0.5, 0.5}, {0.5, 0.5}};
  b.model.lambda = lambda;
  b.model.ystar = Vec{0.0};
  b.model.require_nonnegative = true;

  b.flow_cert.L = 1.0;
  b.flow_cert.alpha = -std::min(k1, k2);
  b.flow_cert.phi = PhiFunction::diff_exp(std::min(k1, k2), std::max(k1, k2));
  b.flow_cert.Lfun = [](const Vec& y) { return std::abs(y[0]); };
  b.flow_cert.Lfun_ball_sup = [](double radius) { return radius; };
  b.flow_cert.exact = true;

  b.jump_cert = JumpRegularityCertificate{1.0, beta, 0.0, 1.0, Vec{0.0}};
  return finish(std::move(b), ov);
}

PresetBundle example_two_flows(const PresetOverrides& ov) {
  const double alpha = ov.alpha.value_or(-1.0);
  const double r = ov.r.value_or(1.0);
  const double beta = ov.burst_mean.value_or(1.0);
  const double lambda = ov.lambda.value_or(1.0);
  require_positive(beta, "burst_mean");
  require_positive(lambda, "lambda");
  // alpha >= 0 is rejected by the admissibility inequality (a~ = 1 here)

  PresetBundle b;
  b.model.flows = SemiflowSpec::affine_contractions(
      {AffineFlow{alpha, Vec{0.0}}, AffineFlow{alpha, Vec{r}}});
  b.model.jump = AdditiveBurstKernel{AdditiveBurstKernel::ExponentialLaw{beta}, Vec{1.0}};
  b.model.pi = {{0.5, 0.5}, {0.5, 0.5}};
  b.model.lambda = lambda;
  b.model.ystar = Vec{0.0};

  b.flow_cert.L = 1.0;
  b.flow_cert.alpha = alpha;
  // rho(S_1(t,y), S_2(t,y)) = |r| (1 - e^{alpha t}) exactly, independent of y.
  b.flow_cert.phi = PhiFunction::exp_saturating(std::abs(r), alpha);
  b.flow_cert.exact = true;

  b.jump_cert = JumpRegularityCertificate{1.0, beta, 0.0, 1.0, Vec{0.0}};
  return finish(std::move(b), ov);
}

PresetBundle ifs_place_dependent(const PresetOverrides& ov) {
  const double alpha = ov.alpha.value_or(-1.0);
  const double lambda = ov.lambda.value_or(1.0);
  require_positive(lambda, "lambda");
  if (!(alpha < 0.0)) throw std::invalid_argument("alpha must be negative");

  PresetBundle b;
  b.model.flows = SemiflowSpec::affine_contractions(
      {AffineFlow{alpha, Vec{0.0}}, AffineFlow{alpha, Vec{0.5}}});
  FiniteIfsKernel kernel;
  kernel.maps = {AffineMap{{0.5}, Vec{0.0}}, AffineMap{{0.5}, Vec{1.0}}};
  kernel.probs = [](const Vec& y) {
    const double p0 = 0.3 + 0.4 / (1.0 + std::abs(y[0]));
    return std::vector<double>{p0, 1.0 - p0};
  };
  b.model.jump = std::move(kernel);
  b.model.pi = {{0.5, 0.5}, {0.5, 0.5}};
  b.model.lambda = lambda;
  b.model.ystar = Vec{0.0};

  b.flow_cert.L = 1.0;
  b.flow_cert.alpha = alpha;
  b.flow_cert.phi = PhiFunction::exp_saturating(0.5, alpha);
  b.flow_cert.exact = true;

  // Both maps halve distances; selection probabilities stay in [0.3, 0.7]
  // and are 0.4-Lipschitz each, so their total variation is 0.8-Lipschitz.
  // Offsets keep E rho(w(y), 0) <= |y|/2 + 0.7.
  b.jump_cert = JumpRegularityCertificate{0.5, 0.7, 0.8, 0.6, Vec{0.0}};
  return finish(std::move(b), ov);
}

}  // namespace

PresetBundle build_preset(PresetId id, const PresetOverrides& ov) {
  switch (id) {
    case PresetId::GeneExpression:
      return gene_expression(ov);
    case PresetId::ExampleTwoFlows:
      return example_two_flows(ov);
    case PresetId::IfsPlaceDependent:
      return ifs_place_dependent(ov);
  }
  throw std::invalid_argument("build_preset: bad id");
}

}  // namespace pdmp
