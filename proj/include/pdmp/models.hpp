#pragma once

#include <optional>
#include <string>

#include "pdmp/analysis.hpp"
#include "pdmp/pdmp.hpp"

namespace pdmp {

enum class PresetId { GeneExpression, ExampleTwoFlows, IfsPlaceDependent };

PresetId preset_from_name(const std::string& name);
std::string preset_name(PresetId id);

/// Optional parameter overrides; anything unset keeps the preset default.
struct PresetOverrides {
  std::optional<double> lambda;      // jump rate
  std::optional<double> burst_mean;  // burst kernels only
  std::optional<double> k1, k2;      // gene-expression degradation rates
  std::optional<double> alpha;       // two-flows / IFS flow rate
  std::optional<double> r;           // two-flows second fixed point
  std::optional<double> c;           // regime-mismatch penalty
};

/// A fully wired model: dynamics, both regularity certificates, and the
/// derived constants (with the metric penalty already set to at least the
/// smallest admissible value).
struct PresetBundle {
  ModelSpec model;
  FlowRegularityCertificate flow_cert;
  JumpRegularityCertificate jump_cert;
  ConstantsReport constants;
};

/// Construct a named preset. Overrides are validated; a combination that
/// breaks the admissibility inequality a~ L + alpha/lambda < 1 is rejected
/// with the inequality named.
PresetBundle build_preset(PresetId id, const PresetOverrides& ov = {});

}  // namespace pdmp
