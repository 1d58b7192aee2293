#ifndef LODIST_SCENARIO_HPP
#define LODIST_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lodist/causal.hpp"
#include "lodist/distance.hpp"
#include "lodist/spacetime.hpp"

namespace lodist {

enum class TaskType { Dist, CheckCausal, CheckSteep, VerifyClifford, EquivalenceScan, Gap };
std::string to_string(TaskType t);

/// Test-function whitelist for the grid checks:
///   "linear:c0,c1,..."          f = c . x
///   "tsine:amp,freq,axis"       f = x^0 + amp * sin(freq * x_axis)
struct FunctionSpec {
  enum class Kind { Linear, TemporalSine };
  Kind kind = Kind::Linear;
  Vector coeffs;
  double amp = 0.0;
  double freq = 1.0;
  int axis = 1;

  static FunctionSpec parse(const std::string& text, int n);
  SampledFunction instantiate(const std::vector<Vector>& grid) const;
  std::string str() const;
};

/// Steep-family whitelist: "boost[:box]" or "tlin[:box]".
struct FamilySpec {
  enum class Kind { Boost, TemporalLinear };
  Kind kind = Kind::Boost;
  double box = 50.0;

  static FamilySpec parse(const std::string& text);
  SteepFamily instantiate(const SpacetimeModel& model) const;
  std::string str() const;
};

struct ModelSpec {
  ModelKind kind = ModelKind::Minkowski;
  int n = 2;
  ScaleFactor a;     // FLRW only
  Interval domain;   // FLRW only

  SpacetimeModel instantiate() const;
  std::string name() const;
};

struct TaskSpec {
  std::string id;
  TaskType type = TaskType::Dist;
  std::string p;  // point name
  std::string q;
  std::string method = "all";  // dist: analytic | oracle | steep | all
  int segments = 64;
  int iterations = 400;
  int starts = 8;
  int trials = 1000;
  std::uint64_t seed = 1;
  bool seed_given = false;
  double tol = kDefaultTol;
  int chi_sign = +1;
  CheckRoute route = CheckRoute::Operator;
  std::optional<FunctionSpec> function;
  std::optional<FamilySpec> family;
  std::optional<GridSpec> grid;
  double gap_threshold = 1e-2;
};

struct ScenarioConfig {
  ModelSpec model;
  std::map<std::string, Vector, std::less<>> points;
  std::vector<TaskSpec> tasks;

  /// Key/value sections: [model], [points], [task NAME]. Throws
  /// std::invalid_argument with a line-numbered message on malformed input.
  static ScenarioConfig parse(std::istream& in);
  static ScenarioConfig parse_file(const std::string& path);

  const Vector& resolve_point(const std::string& name) const;
};

struct ResultRow {
  std::string task;
  std::string model;
  int n = 0;
  std::string p;
  std::string q;
  std::string method;
  std::optional<double> value;
  std::optional<double> margin;
  std::optional<double> gap;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string status;
};

struct RunOutput {
  std::vector<ResultRow> rows;
  std::string summary;
  std::map<std::string, std::string> certificates;  // task id -> sidecar text
  int exit_code = 0;  // 0 ok, 1 failed verification
};

/// Executes the task list in order. Deterministic: identical config (and
/// seeds) produce byte-identical CSV.
RunOutput run_scenario(const ScenarioConfig& config);

std::string to_csv(const std::vector<ResultRow>& rows);

/// Writes results.csv plus one "<task>_certificate.txt" sidecar per
/// certificate into outdir (created if missing).
void write_outputs(const RunOutput& output, const std::string& outdir);

}  // namespace lodist

#endif
