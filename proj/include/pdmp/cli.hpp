#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdmp/models.hpp"

namespace pdmp {

/// Parsed and validated run configuration. Unknown keys anywhere in the file
/// are rejected.
struct RunConfig {
  int schema_version = 1;
  // model: either a preset name with overrides, or an inline spec
  bool use_preset = true;
  PresetId preset = PresetId::GeneExpression;
  PresetOverrides overrides;
  nlohmann::json inline_model;  // raw inline block, built on demand
  std::string experiment;       // simulate|couple|fm|check|constants|correspond|full-report
  // budget
  std::size_t n_steps = 100, n_samples = 1000, burn_in = 200, n_stat = 1000,
              n_bootstrap = 200;
  double T = 20.0;
  std::uint64_t seed = 12345;
  // output
  std::string out_dir = "out";
  std::vector<std::string> formats = {"csv", "json"};
  std::size_t workers = 0;  // 0 = available parallelism
  // experiment-specific
  nlohmann::json initial;  // optional x1/x2 starting states for couple/fm
  std::string fm_csv_a, fm_csv_b;
  std::size_t fm_step = 0;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Materialize the model plus certificates from the config.
PresetBundle build_model(const RunConfig& cfg);

/// Read an ensemble CSV (columns traj,n,tau,y_*,regime) and return the
/// empirical measure of the slice at the given step.
EmpiricalMeasure measure_from_csv(const std::string& path, std::size_t step);

/// `run <config>` / `validate <config>` entry point; returns the process
/// exit code (0 ok, 1 config or internal error, 2 hypothesis-check failure).
int cli_main(int argc, const char* const* argv);

}  // namespace pdmp
