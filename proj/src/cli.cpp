#include "pdmp/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace pdmp {

namespace {

using nlohmann::json;

void expect_keys(const json& obj, std::initializer_list<const char*> allowed,
                 const std::string& ctx) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok)
      throw std::invalid_argument("unknown key '" + key + "' in " + ctx);
  }
}

const json& get_req(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw std::invalid_argument("missing required key '" + std::string(key) + "' in " + ctx);
  return *it;
}

}  // namespace

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config root must be an object");
  expect_keys(j, {"schema_version", "model", "experiment", "budget", "output", "workers",
                  "initial", "fm"},
              "config");
  RunConfig cfg;
  cfg.schema_version = get_req(j, "schema_version", "config").get<int>();
  if (cfg.schema_version != 1)
    throw std::invalid_argument("unsupported schema_version (expected 1)");

  const json& model = get_req(j, "model", "config");
  expect_keys(model, {"preset", "overrides", "inline"}, "model");
  if (model.contains("preset") == model.contains("inline"))
    throw std::invalid_argument("model must have exactly one of 'preset' or 'inline'");
  if (model.contains("preset")) {
    cfg.use_preset = true;
    cfg.preset = preset_from_name(model.at("preset").get<std::string>());
    if (model.contains("overrides")) {
      const json& ov = model.at("overrides");
      expect_keys(ov, {"lambda", "burst_mean", "k1", "k2", "alpha", "r", "c"},
                  "model.overrides");
      auto opt = [&](const char* k) -> std::optional<double> {
        if (ov.contains(k)) return ov.at(k).get<double>();
        return std::nullopt;
      };
      cfg.overrides = PresetOverrides{opt("lambda"), opt("burst_mean"), opt("k1"),
                                      opt("k2"),     opt("alpha"),      opt("r"),
                                      opt("c")};
    }
  } else {
    cfg.use_preset = false;
    cfg.inline_model = model.at("inline");
  }

  cfg.experiment = get_req(j, "experiment", "config").get<std::string>();
  static const char* kExperiments[] = {"simulate", "couple",    "fm",         "check",
                                       "constants", "correspond", "full-report"};
  bool known = false;
  for (const char* e : kExperiments)
    if (cfg.experiment == e) known = true;
  if (!known) throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");

  if (j.contains("budget")) {
    const json& b = j.at("budget");
    expect_keys(b, {"n_steps", "n_samples", "T", "seed", "burn_in", "n_stat", "n_bootstrap"},
                "budget");
    if (b.contains("n_steps")) cfg.n_steps = b.at("n_steps").get<std::size_t>();
    if (b.contains("n_samples")) cfg.n_samples = b.at("n_samples").get<std::size_t>();
    if (b.contains("T")) cfg.T = b.at("T").get<double>();
    if (b.contains("seed")) cfg.seed = b.at("seed").get<std::uint64_t>();
    if (b.contains("burn_in")) cfg.burn_in = b.at("burn_in").get<std::size_t>();
    if (b.contains("n_stat")) cfg.n_stat = b.at("n_stat").get<std::size_t>();
    if (b.contains("n_bootstrap")) cfg.n_bootstrap = b.at("n_bootstrap").get<std::size_t>();
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    expect_keys(o, {"directory", "formats"}, "output");
    if (o.contains("directory")) cfg.out_dir = o.at("directory").get<std::string>();
    if (o.contains("formats"))
      cfg.formats = o.at("formats").get<std::vector<std::string>>();
  }
  if (j.contains("workers")) cfg.workers = j.at("workers").get<std::size_t>();
  if (j.contains("initial")) {
    cfg.initial = j.at("initial");
    expect_keys(cfg.initial, {"x1", "x2"}, "initial");
  }
  if (j.contains("fm")) {
    const json& f = j.at("fm");
    expect_keys(f, {"csv_a", "csv_b", "step"}, "fm");
    if (f.contains("csv_a")) cfg.fm_csv_a = f.at("csv_a").get<std::string>();
    if (f.contains("csv_b")) cfg.fm_csv_b = f.at("csv_b").get<std::string>();
    if (f.contains("step")) cfg.fm_step = f.at("step").get<std::size_t>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "config parse error at line " << line << ", column " << col << ": " << e.what();
    throw std::invalid_argument(os.str());
  }
  return parse_config(j);
}

namespace {

PhiFunction phi_from_json(const json& p) {
  expect_keys(p, {"kind", "scale", "rate", "k1", "k2"}, "flow_cert.phi");
  const std::string kind = get_req(p, "kind", "flow_cert.phi").get<std::string>();
  if (kind == "zero") return PhiFunction::zero();
  if (kind == "linear") return PhiFunction::linear(p.at("scale").get<double>());
  if (kind == "exp-saturating")
    return PhiFunction::exp_saturating(p.at("scale").get<double>(),
                                       p.at("rate").get<double>());
  if (kind == "diff-exp")
    return PhiFunction::diff_exp(p.at("k1").get<double>(), p.at("k2").get<double>());
  throw std::invalid_argument("unknown phi kind '" + kind + "'");
}

PresetBundle build_inline(const json& m) {
  expect_keys(m,
              {"d", "lambda", "c", "ystar", "pi", "flows", "jump", "flow_cert",
               "jump_cert", "require_nonnegative"},
              "model.inline");
  PresetBundle b;
  const std::size_t d = get_req(m, "d", "model.inline").get<std::size_t>();
  b.model.lambda = get_req(m, "lambda", "model.inline").get<double>();
  b.model.ystar = get_req(m, "ystar", "model.inline").get<Vec>();
  if (b.model.ystar.size() != d)
    throw std::invalid_argument("ystar must have d entries");
  b.model.pi = get_req(m, "pi", "model.inline").get<std::vector<std::vector<double>>>();
  if (m.contains("require_nonnegative"))
    b.model.require_nonnegative = m.at("require_nonnegative").get<bool>();

  std::vector<AffineFlow> flows;
  for (const json& f : get_req(m, "flows", "model.inline")) {
    expect_keys(f, {"alpha", "fixed_point"}, "model.inline.flows[]");
    flows.push_back(AffineFlow{get_req(f, "alpha", "flows[]").get<double>(),
                               get_req(f, "fixed_point", "flows[]").get<Vec>()});
  }
  b.model.flows = SemiflowSpec::affine_contractions(std::move(flows));

  const json& jk = get_req(m, "jump", "model.inline");
  const std::string type = get_req(jk, "type", "model.inline.jump").get<std::string>();
  if (type == "burst") {
    expect_keys(jk, {"type", "law", "direction"}, "model.inline.jump");
    const json& law = get_req(jk, "law", "jump");
    AdditiveBurstKernel burst{AdditiveBurstKernel::ExponentialLaw{1.0}, {}};
    const std::string lk = get_req(law, "kind", "jump.law").get<std::string>();
    if (lk == "exponential")
      burst.law = AdditiveBurstKernel::ExponentialLaw{law.at("mean").get<double>()};
    else if (lk == "discrete")
      burst.law = AdditiveBurstKernel::DiscreteLaw{
          law.at("atoms").get<std::vector<std::pair<double, double>>>()};
    else
      throw std::invalid_argument("unknown burst law kind '" + lk + "'");
    burst.direction = get_req(jk, "direction", "jump").get<Vec>();
    b.model.jump = std::move(burst);
  } else if (type == "ifs") {
    expect_keys(jk, {"type", "maps", "probs"}, "model.inline.jump");
    FiniteIfsKernel kernel;
    for (const json& mp : get_req(jk, "maps", "jump")) {
      expect_keys(mp, {"A", "c"}, "jump.maps[]");
      kernel.maps.push_back(AffineMap{mp.at("A").get<std::vector<double>>(),
                                      mp.at("c").get<Vec>()});
    }
    const std::vector<double> probs = get_req(jk, "probs", "jump").get<std::vector<double>>();
    kernel.probs = [probs](const Vec&) { return probs; };
    b.model.jump = std::move(kernel);
  } else {
    throw std::invalid_argument("unknown jump type '" + type + "'");
  }

  const json& fc = get_req(m, "flow_cert", "model.inline");
  expect_keys(fc, {"L", "alpha", "phi"}, "flow_cert");
  b.flow_cert.L = get_req(fc, "L", "flow_cert").get<double>();
  b.flow_cert.alpha = get_req(fc, "alpha", "flow_cert").get<double>();
  b.flow_cert.phi = phi_from_json(get_req(fc, "phi", "flow_cert"));

  const json& jc = get_req(m, "jump_cert", "model.inline");
  expect_keys(jc, {"a_tilde", "b_tilde", "l_tilde", "eta"}, "jump_cert");
  b.jump_cert.a_tilde = get_req(jc, "a_tilde", "jump_cert").get<double>();
  b.jump_cert.b_tilde = get_req(jc, "b_tilde", "jump_cert").get<double>();
  b.jump_cert.l_tilde = get_req(jc, "l_tilde", "jump_cert").get<double>();
  b.jump_cert.eta = get_req(jc, "eta", "jump_cert").get<double>();
  b.jump_cert.ystar = b.model.ystar;

  b.model.metric = HybridMetric(1.0);
  b.constants = compute_constants(b.model, b.flow_cert, b.jump_cert);
  const double c =
      m.contains("c") ? m.at("c").get<double>() : std::max(b.constants.c_min, 1.0);
  b.model.metric = HybridMetric(c);
  b.model.validate();
  return b;
}

}  // namespace

PresetBundle build_model(const RunConfig& cfg) {
  if (cfg.use_preset) return build_preset(cfg.preset, cfg.overrides);
  return build_inline(cfg.inline_model);
}

EmpiricalMeasure measure_from_csv(const std::string& path, std::size_t step) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read CSV: " + path);
  std::string header;
  std::getline(in, header);
  std::vector<std::string> cols;
  {
    std::stringstream hs(header);
    std::string c;
    while (std::getline(hs, c, ',')) cols.push_back(c);
  }
  std::ptrdiff_t n_col = -1, regime_col = -1;
  std::vector<std::size_t> y_cols;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] == "n") n_col = static_cast<std::ptrdiff_t>(k);
    if (cols[k] == "regime") regime_col = static_cast<std::ptrdiff_t>(k);
    if (cols[k].rfind("y_", 0) == 0) y_cols.push_back(k);
  }
  if (n_col < 0 || regime_col < 0 || y_cols.empty())
    throw std::invalid_argument("CSV lacks n/y_*/regime columns: " + path);
  std::vector<HybridState> states;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (std::stoull(cells[static_cast<std::size_t>(n_col)]) != step) continue;
    HybridState x;
    for (std::size_t k : y_cols) x.y.push_back(std::stod(cells[k]));
    x.regime = std::stoi(cells[static_cast<std::size_t>(regime_col)]);
    states.push_back(std::move(x));
  }
  if (states.empty())
    throw std::invalid_argument("no rows at step " + std::to_string(step) + " in " + path);
  return EmpiricalMeasure::uniform(states);
}

namespace {

namespace fs = std::filesystem;

HybridState state_from_json(const json& j, const Vec& fallback_y, int fallback_regime) {
  if (j.is_null()) return HybridState{fallback_y, fallback_regime};
  expect_keys(j, {"y", "regime"}, "initial state");
  return HybridState{get_req(j, "y", "initial state").get<Vec>(),
                     get_req(j, "regime", "initial state").get<int>()};
}

std::pair<HybridState, HybridState> initial_pair(const RunConfig& cfg,
                                                 const ModelSpec& model) {
  Vec y2 = model.ystar;
  y2[0] += 3.0;
  const int last = static_cast<int>(model.num_regimes()) - 1;
  const json blank = json::object();
  const json& ini = cfg.initial.is_object() ? cfg.initial : blank;
  HybridState x1 = state_from_json(ini.value("x1", json()), model.ystar, 0);
  HybridState x2 = state_from_json(ini.value("x2", json()), y2, last);
  return {x1, x2};
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

void write_report(const fs::path& dir, const json& report) {
  write_text(dir / "report.json", report.dump(2) + "\n");
}

void write_metadata(const fs::path& dir, const RunConfig& cfg) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  json meta{{"experiment", cfg.experiment},
            {"unix_time_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(now).count()}};
  write_text(dir / "metadata.json", meta.dump(2) + "\n");
}

void write_ensemble_csv(const fs::path& p, const std::vector<ChainTrajectory>& trajs) {
  std::ofstream os(p);
  const std::size_t d =
      trajs.empty() || trajs[0].states.empty() ? 0 : trajs[0].states[0].dim();
  os << "traj,n,tau";
  for (std::size_t k = 0; k < d; ++k) os << ",y_" << k;
  os << ",regime\n";
  os.precision(17);
  for (std::size_t j = 0; j < trajs.size(); ++j)
    for (std::size_t n = 0; n < trajs[j].states.size(); ++n) {
      os << j << ',' << n << ',' << trajs[j].jump_times[n];
      for (double v : trajs[j].states[n].y) os << ',' << v;
      os << ',' << trajs[j].states[n].regime << '\n';
    }
}

void write_rate_csv(const fs::path& p, const RateEstimate& est) {
  std::ofstream os(p);
  os << "t,mean_rho_bar,se\n";
  os.precision(17);
  for (std::size_t k = 0; k < est.grid.size(); ++k)
    os << est.grid[k] << ',' << est.mean[k] << ',' << est.se[k] << '\n';
}

std::vector<CheckOutcome> run_all_checks(const RunConfig& cfg, const PresetBundle& b) {
  std::vector<CheckOutcome> checks;
  const std::size_t d = b.model.flows.dim();
  const double lo = b.model.require_nonnegative ? 0.0 : -5.0, hi = 5.0;
  const std::size_t n = std::max<std::size_t>(50, std::min<std::size_t>(cfg.n_samples, 500));

  checks.push_back(
      check_A1(b.model, b.jump_cert, box_point_sampler(d, lo, hi), n, cfg.seed));
  for (CheckOutcome& c : check_A2_A5(b.model)) checks.push_back(std::move(c));

  RngStream a3rng(cfg.seed, 0, StreamPurpose::FlowCheck);
  const CheckReport a3 =
      check_A3(b.model.flows, b.flow_cert,
               box_sampler_a3(d, lo, hi, b.model.num_regimes()), n, a3rng, b.model.metric);
  checks.push_back(CheckOutcome{"A3", a3.pass, a3.worst_ratio, 1e-9, a3.n_samples});
  RngStream a4rng(cfg.seed, 1, StreamPurpose::FlowCheck);
  const CheckReport a4 =
      check_A4(b.model.flows, b.flow_cert,
               box_sampler_a4(d, lo, hi, b.model.num_regimes()), n, a4rng, b.model.metric);
  checks.push_back(CheckOutcome{"A4", a4.pass, a4.worst_ratio, 1e-9, a4.n_samples});

  RngStream jrng(cfg.seed, 0, StreamPurpose::JumpCheck);
  const JumpHypothesesReport jh = check_jump_hypotheses(
      b.model.jump, b.jump_cert, box_pair_sampler(d, lo, hi), n, jrng, b.model.metric);
  checks.push_back(
      CheckOutcome{"i1", jh.contraction_pass, jh.contraction_ratio, 1e-9, jh.n_samples});
  checks.push_back(
      CheckOutcome{"i2", jh.lipschitz_pass, jh.prob_lipschitz, 1e-9, jh.n_samples});
  checks.push_back(CheckOutcome{"i3", jh.overlap_pass, jh.min_overlap, 1e-9, jh.n_samples});
  return checks;
}

json checks_to_json(const std::vector<CheckOutcome>& checks) {
  json arr = json::array();
  for (const CheckOutcome& c : checks) arr.push_back(to_json(c));
  return arr;
}

int list_failures(const std::vector<CheckOutcome>& checks) {
  int failures = 0;
  for (const CheckOutcome& c : checks)
    if (!c.pass) {
      ++failures;
      std::cerr << "check failed: (" << c.name << ") worst=" << c.worst << "\n";
    }
  return failures;
}

int run_experiment(const RunConfig& cfg) {
  const char* env_out = std::getenv("PDMP_ERGO_OUT");
  const fs::path dir = env_out ? fs::path(env_out) : fs::path(cfg.out_dir);
  fs::create_directories(dir);
  const PresetBundle b = build_model(cfg);
  write_metadata(dir, cfg);
  json report{{"schema_version", 1}, {"experiment", cfg.experiment}};

  if (cfg.experiment == "simulate") {
    std::vector<ChainTrajectory> trajs(cfg.n_samples);
    for (std::size_t j = 0; j < cfg.n_samples; ++j) {
      RngStream rng(cfg.seed, j, StreamPurpose::Chain);
      trajs[j] = simulate_chain(b.model, HybridState{b.model.ystar, 0}, cfg.n_steps, rng);
    }
    write_ensemble_csv(dir / "trajectories.csv", trajs);
    double mean_final = 0.0;
    for (const ChainTrajectory& t : trajs) mean_final += t.states.back().y[0];
    report["mean_final_y0"] = mean_final / static_cast<double>(cfg.n_samples);
    report["n_samples"] = cfg.n_samples;
    report["n_steps"] = cfg.n_steps;
    write_report(dir, report);
    return 0;
  }

  if (cfg.experiment == "couple") {
    const auto [x1, x2] = initial_pair(cfg, b.model);
    std::size_t q_steps = 0, total_steps = 0, kappa_finite = 0;
    double kappa_sum = 0.0;
    for (std::size_t j = 0; j < cfg.n_samples; ++j) {
      RngStream rng(cfg.seed, j, StreamPurpose::Coupling);
      const CoupledTrace trace =
          simulate_coupled(b.model, b.jump_cert, x1, x2, cfg.n_steps, rng, false);
      if (j == 0) {
        std::ofstream os(dir / "coupled_trace.csv");
        write_coupled_trace_csv(os, trace, b.model.metric);
      }
      for (BranchFlag f : trace.branch_flags) {
        ++total_steps;
        if (f == BranchFlag::Q) ++q_steps;
      }
      if (trace.kappa != kNoCoupling) {
        ++kappa_finite;
        kappa_sum += static_cast<double>(trace.kappa);
      }
    }
    report["q_branch_fraction"] =
        static_cast<double>(q_steps) / static_cast<double>(total_steps);
    report["kappa_finite_fraction"] =
        static_cast<double>(kappa_finite) / static_cast<double>(cfg.n_samples);
    report["kappa_mean"] =
        kappa_finite ? kappa_sum / static_cast<double>(kappa_finite) : -1.0;
    report["n_samples"] = cfg.n_samples;
    write_report(dir, report);
    return 0;
  }

  if (cfg.experiment == "fm") {
    EmpiricalMeasure mu, nu;
    if (!cfg.fm_csv_a.empty() || !cfg.fm_csv_b.empty()) {
      mu = measure_from_csv(cfg.fm_csv_a, cfg.fm_step);
      nu = measure_from_csv(cfg.fm_csv_b, cfg.fm_step);
    } else {
      const auto [x1, x2] = initial_pair(cfg, b.model);
      std::vector<HybridState> sa(cfg.n_samples), sb(cfg.n_samples);
      std::vector<ChainTrajectory> ta(cfg.n_samples), tb(cfg.n_samples);
      for (std::size_t j = 0; j < cfg.n_samples; ++j) {
        RngStream ra(cfg.seed, j, StreamPurpose::Chain);
        RngStream rb(cfg.seed, 1000000 + j, StreamPurpose::Chain);
        ta[j] = simulate_chain(b.model, x1, cfg.n_steps, ra);
        tb[j] = simulate_chain(b.model, x2, cfg.n_steps, rb);
        sa[j] = ta[j].states.back();
        sb[j] = tb[j].states.back();
      }
      write_ensemble_csv(dir / "ensemble_a.csv", ta);
      write_ensemble_csv(dir / "ensemble_b.csv", tb);
      mu = EmpiricalMeasure::uniform(sa);
      nu = EmpiricalMeasure::uniform(sb);
    }
    report["fm_distance"] = fm_distance(mu, nu, b.model.metric);
    write_report(dir, report);
    return 0;
  }

  if (cfg.experiment == "constants") {
    report["constants"] = to_json(b.constants);
    write_report(dir, report);
    return 0;
  }

  if (cfg.experiment == "check") {
    const std::vector<CheckOutcome> checks = run_all_checks(cfg, b);
    report["checks"] = checks_to_json(checks);
    write_report(dir, report);
    return list_failures(checks) ? 2 : 0;
  }

  if (cfg.experiment == "correspond") {
    const CorrespondenceReport rep = invariant_correspondence_test(
        b.model, cfg.burn_in, cfg.n_stat, cfg.T, cfg.n_samples, cfg.seed, cfg.n_bootstrap);
    report["correspondence"] = to_json(rep);
    write_report(dir, report);
    return 0;
  }

  // full-report: constants -> checks -> chain contraction -> process decay ->
  // correspondence; stop at the first hard failure, keeping what was written.
  report["constants"] = to_json(b.constants);
  write_report(dir, report);
  const std::vector<CheckOutcome> checks = run_all_checks(cfg, b);
  report["checks"] = checks_to_json(checks);
  write_report(dir, report);
  if (list_failures(checks)) return 2;

  const auto [x1, x2] = initial_pair(cfg, b.model);
  const std::vector<StatePair> pairs{{x1, x2}};
  const RateEstimate chain_rate = estimate_chain_contraction(
      b.model, b.jump_cert, pairs, std::max<std::size_t>(cfg.n_steps, 5), cfg.n_samples,
      cfg.seed);
  write_rate_csv(dir / "rate_fit_chain.csv", chain_rate);
  report["rates"]["chain"] = to_json(chain_rate);
  write_report(dir, report);

  std::vector<double> grid;
  for (double t = 1.0; t <= std::min(cfg.T, 20.0); t += 1.0) grid.push_back(t);
  const RateEstimate proc_rate = estimate_process_decay(b.model, b.jump_cert, pairs, grid,
                                                        cfg.n_samples, cfg.seed, true);
  write_rate_csv(dir / "rate_fit_process.csv", proc_rate);
  report["rates"]["process"] = to_json(proc_rate);
  write_report(dir, report);

  const CorrespondenceReport rep = invariant_correspondence_test(
      b.model, cfg.burn_in, cfg.n_stat, cfg.T, cfg.n_samples, cfg.seed, cfg.n_bootstrap);
  report["correspondence"] = to_json(rep);
  write_report(dir, report);
  return 0;
}

int validate_config(const std::string& path) {
  const RunConfig cfg = load_config(path);
  const PresetBundle b = build_model(cfg);
  std::cout << "ok\n";
  std::cout << "derived c_min = " << b.constants.c_min << "\n";
  const double c = b.model.metric.c;
  if (c < b.constants.c_min)
    std::cout << "warning: c = " << c << " is below the smallest admissible penalty c_min = "
              << b.constants.c_min << "\n";
  const double lhs = b.jump_cert.a_tilde * b.flow_cert.L +
                     b.flow_cert.alpha / b.model.lambda;
  std::cout << "admissibility a~ L + alpha/lambda = " << lhs << " (< 1 required)\n";
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"simulation and ergodicity analysis for randomly switched jump processes"};
  app.require_subcommand(1);
  std::string run_path, validate_path;
  CLI::App* run = app.add_subcommand("run", "run an experiment from a config file");
  run->add_option("config", run_path, "config file (JSON)")->required();
  CLI::App* val = app.add_subcommand("validate", "validate a config without running");
  val->add_option("config", validate_path, "config file (JSON)")->required();

  std::vector<std::string> args;
  for (int k = argc - 1; k > 0; --k) args.emplace_back(argv[k]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return run_experiment(load_config(run_path));
    return validate_config(validate_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pdmp
