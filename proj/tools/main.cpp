// lodist: Lorentzian distances and causality checks on model spacetimes.
//
// Subcommands mirror the scenario task types; `lodist run config.txt`
// executes a whole task list. Results go to <outdir>/results.csv plus
// per-task certificate sidecars; a text summary is printed to stdout.
// Exit codes: 0 success, 1 failed verification, 2 config/usage error.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lodist/scenario.hpp"

namespace {

struct ModelFlags {
  std::string kind = "minkowski";
  int n = 2;
  std::string a = "1";
  double t_min = 0.5;
  double t_max = 10.0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
  cmd->add_option("--model", m.kind, "Model kind: minkowski | flrw")
      ->check(CLI::IsMember({"minkowski", "flrw"}));
  cmd->add_option("--n", m.n, "Spacetime dimension (>= 2)");
  cmd->add_option("--a", m.a, "FLRW scale factor: c | t | c*t | t^p | c*t^p");
  cmd->add_option("--t-min", m.t_min, "FLRW domain lower bound");
  cmd->add_option("--t-max", m.t_max, "FLRW domain upper bound");
}

lodist::ModelSpec to_model_spec(const ModelFlags& m) {
  lodist::ModelSpec spec;
  spec.n = m.n;
  if (m.kind == "flrw") {
    spec.kind = lodist::ModelKind::Flrw;
    spec.a = lodist::ScaleFactor::parse(m.a);
    spec.domain = lodist::Interval{m.t_min, m.t_max};
  } else {
    spec.kind = lodist::ModelKind::Minkowski;
  }
  return spec;
}

lodist::Vector parse_point(const std::string& text) {
  lodist::Vector v;
  std::string cur;
  std::vector<double> values;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) values.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  v.resize(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<int>(i)] = values[i];
  return v;
}

std::string resolve_outdir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("LODIST_OUT"); env && *env) return env;
  return ".";
}

int finish(const lodist::RunOutput& output, const std::string& outdir) {
  lodist::write_outputs(output, outdir);
  std::cout << output.summary;
  std::cout << "results: " << outdir << "/results.csv\n";
  return output.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentzian distance and causality toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --out may appear after the subcommand too

  std::string outdir_flag;
  app.add_option("--out,-o", outdir_flag,
                 "Output directory (default: $LODIST_OUT or current directory)");

  // run
  auto* run_cmd = app.add_subcommand("run", "Run a scenario config file");
  std::string config_path;
  run_cmd->add_option("config", config_path, "Scenario config file")->required();

  // dist
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two chart points");
  ModelFlags dist_model;
  add_model_flags(dist_cmd, dist_model);
  std::string dist_p, dist_q, dist_method = "all", dist_family;
  int dist_segments = 64, dist_iterations = 400, dist_starts = 8;
  std::uint64_t dist_seed = 1;
  double dist_tol = lodist::kDefaultTol;
  dist_cmd->add_option("--p", dist_p, "Start point, e.g. 0,0")->required();
  dist_cmd->add_option("--q", dist_q, "End point")->required();
  dist_cmd->add_option("--method", dist_method, "analytic | oracle | steep | all")
      ->check(CLI::IsMember({"analytic", "oracle", "steep", "all"}));
  dist_cmd->add_option("--segments", dist_segments, "Curve segments (oracle)");
  dist_cmd->add_option("--iterations", dist_iterations, "Ascent iterations (oracle)");
  dist_cmd->add_option("--starts", dist_starts, "Multi-start count");
  dist_cmd->add_option("--seed", dist_seed, "Seed for the multi-start optimizers");
  dist_cmd->add_option("--tol", dist_tol, "Verdict tolerance");
  dist_cmd->add_option("--family", dist_family,
                       "Steep family: boost[:box] | tlin[:box] (default by model)");

  // check-causal / check-steep
  auto add_check = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    return cmd;
  };
  auto* causal_cmd = add_check("check-causal", "Grid check of a test function's causality");
  auto* steep_cmd = add_check("check-steep", "Grid check of a test function's steepness");
  struct CheckFlags {
    ModelFlags model;
    std::string f, grid_min, grid_max, grid_counts, route = "operator";
    double tol = lodist::kDefaultTol;
    int chi_sign = 1;
  } causal_flags, steep_flags;
  for (auto [cmd, flags] : {std::pair{causal_cmd, &causal_flags}, {steep_cmd, &steep_flags}}) {
    add_model_flags(cmd, flags->model);
    cmd->add_option("--f", flags->f, "Function: linear:c0,c1,... | tsine:amp,freq,axis")
        ->required();
    cmd->add_option("--grid-min", flags->grid_min, "Grid lower corner")->required();
    cmd->add_option("--grid-max", flags->grid_max, "Grid upper corner")->required();
    cmd->add_option("--grid-counts", flags->grid_counts, "Points per axis")->required();
    cmd->add_option("--route", flags->route, "gradient | operator")
        ->check(CLI::IsMember({"gradient", "operator"}));
    cmd->add_option("--tol", flags->tol, "Verdict tolerance");
    cmd->add_option("--chi-sign", flags->chi_sign, "Chirality sign (+1 or -1)");
  }

  // verify-clifford
  auto* verify_cmd = app.add_subcommand("verify-clifford", "Clifford identity scan");
  int verify_n = 4, verify_chi_sign = 1;
  double verify_tol = 1e-12;
  verify_cmd->add_option("--n", verify_n, "Spacetime dimension");
  verify_cmd->add_option("--tol", verify_tol, "Max allowed deviation");
  verify_cmd->add_option("--chi-sign", verify_chi_sign, "Chirality sign (+1 or -1)");

  // equivalence-scan
  auto* scan_cmd = app.add_subcommand(
      "equivalence-scan", "Random cross-check of gradient vs operator verdicts");
  ModelFlags scan_model;
  add_model_flags(scan_cmd, scan_model);
  int scan_trials = 1000;
  std::uint64_t scan_seed = 1;
  double scan_tol = lodist::kDefaultTol;
  int scan_chi_sign = 1;
  scan_cmd->add_option("--trials", scan_trials, "Number of random covectors");
  scan_cmd->add_option("--seed", scan_seed, "Seed");
  scan_cmd->add_option("--tol", scan_tol, "Verdict tolerance");
  scan_cmd->add_option("--chi-sign", scan_chi_sign, "Chirality sign (+1 or -1)");

  // gap
  auto* gap_cmd = app.add_subcommand("gap", "Duality gap: curve oracle vs steep family");
  ModelFlags gap_model;
  add_model_flags(gap_cmd, gap_model);
  std::string gap_p, gap_q, gap_family;
  int gap_segments = 64, gap_iterations = 400, gap_starts = 8;
  std::uint64_t gap_seed = 1;
  double gap_threshold = 1e-2;
  gap_cmd->add_option("--p", gap_p, "Start point")->required();
  gap_cmd->add_option("--q", gap_q, "End point")->required();
  gap_cmd->add_option("--family", gap_family, "Steep family (default by model)");
  gap_cmd->add_option("--segments", gap_segments, "Curve segments");
  gap_cmd->add_option("--iterations", gap_iterations, "Ascent iterations");
  gap_cmd->add_option("--starts", gap_starts, "Multi-start count");
  gap_cmd->add_option("--seed", gap_seed, "Seed");
  gap_cmd->add_option("--threshold", gap_threshold, "Gap flag threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string outdir = resolve_outdir(outdir_flag);

  try {
    lodist::ScenarioConfig config;

    if (run_cmd->parsed()) {
      config = lodist::ScenarioConfig::parse_file(config_path);
      return finish(lodist::run_scenario(config), outdir);
    }

    if (dist_cmd->parsed()) {
      config.model = to_model_spec(dist_model);
      config.points["p"] = parse_point(dist_p);
      config.points["q"] = parse_point(dist_q);
      lodist::TaskSpec task;
      task.id = "dist";
      task.type = lodist::TaskType::Dist;
      task.p = "p";
      task.q = "q";
      task.method = dist_method;
      task.segments = dist_segments;
      task.iterations = dist_iterations;
      task.starts = dist_starts;
      task.seed = dist_seed;
      task.seed_given = true;
      task.tol = dist_tol;
      if (!dist_family.empty()) task.family = lodist::FamilySpec::parse(dist_family);
      config.tasks.push_back(task);
    } else if (causal_cmd->parsed() || steep_cmd->parsed()) {
      const CheckFlags& flags = causal_cmd->parsed() ? causal_flags : steep_flags;
      config.model = to_model_spec(flags.model);
      lodist::TaskSpec task;
      task.id = causal_cmd->parsed() ? "check-causal" : "check-steep";
      task.type = causal_cmd->parsed() ? lodist::TaskType::CheckCausal
                                       : lodist::TaskType::CheckSteep;
      task.function = lodist::FunctionSpec::parse(flags.f, config.model.n);
      lodist::GridSpec grid;
      grid.lo = parse_point(flags.grid_min);
      grid.hi = parse_point(flags.grid_max);
      for (double c : parse_point(flags.grid_counts))
        grid.counts.push_back(static_cast<int>(c));
      task.grid = grid;
      task.route = flags.route == "gradient" ? lodist::CheckRoute::Gradient
                                             : lodist::CheckRoute::Operator;
      task.tol = flags.tol;
      task.chi_sign = flags.chi_sign;
      config.tasks.push_back(task);
    } else if (verify_cmd->parsed()) {
      config.model.kind = lodist::ModelKind::Minkowski;
      config.model.n = verify_n;
      lodist::TaskSpec task;
      task.id = "verify-clifford";
      task.type = lodist::TaskType::VerifyClifford;
      task.tol = verify_tol;
      task.chi_sign = verify_chi_sign;
      config.tasks.push_back(task);
    } else if (scan_cmd->parsed()) {
      config.model = to_model_spec(scan_model);
      lodist::TaskSpec task;
      task.id = "equivalence-scan";
      task.type = lodist::TaskType::EquivalenceScan;
      task.trials = scan_trials;
      task.seed = scan_seed;
      task.seed_given = true;
      task.tol = scan_tol;
      task.chi_sign = scan_chi_sign;
      config.tasks.push_back(task);
    } else if (gap_cmd->parsed()) {
      config.model = to_model_spec(gap_model);
      config.points["p"] = parse_point(gap_p);
      config.points["q"] = parse_point(gap_q);
      lodist::TaskSpec task;
      task.id = "gap";
      task.type = lodist::TaskType::Gap;
      task.p = "p";
      task.q = "q";
      if (!gap_family.empty()) task.family = lodist::FamilySpec::parse(gap_family);
      task.segments = gap_segments;
      task.iterations = gap_iterations;
      task.starts = gap_starts;
      task.seed = gap_seed;
      task.seed_given = true;
      task.gap_threshold = gap_threshold;
      config.tasks.push_back(task);
    }

    config.model.instantiate();  // validate before running
    return finish(lodist::run_scenario(config), outdir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
