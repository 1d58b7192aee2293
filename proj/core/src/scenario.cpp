#include "lodist/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lodist {

std::string to_string(TaskType t) {
  switch (t) {
    case TaskType::Dist: return "dist";
    case TaskType::CheckCausal: return "check-causal";
    case TaskType::CheckSteep: return "check-steep";
    case TaskType::VerifyClifford: return "verify-clifford";
    case TaskType::EquivalenceScan: return "equivalence-scan";
    case TaskType::Gap: return "gap";
  }
  return "?";
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double parse_double_or_throw(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected a number, got '" + s + "'");
  }
}

long parse_int_or_throw(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
  }
}

Vector parse_vector(const std::string& s, const std::string& what) {
  const auto parts = split_list(s);
  if (parts.empty()) throw std::invalid_argument(what + ": empty coordinate list");
  Vector v(static_cast<int>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    v[static_cast<int>(i)] = parse_double_or_throw(parts[i], what);
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_point(const Vector& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fmt(v[i]);
  }
  return out;
}

}  // namespace

FunctionSpec FunctionSpec::parse(const std::string& text, int n) {
  const auto colon = text.find(':');
  const std::string kind = strip(colon == std::string::npos ? text : text.substr(0, colon));
  const std::string args = colon == std::string::npos ? "" : strip(text.substr(colon + 1));

  FunctionSpec f;
  if (kind == "linear") {
    f.kind = Kind::Linear;
    f.coeffs = parse_vector(args, "linear function coefficients");
    if (f.coeffs.size() != n)
      throw std::invalid_argument("linear function needs " + std::to_string(n) +
                                  " coefficients");
  } else if (kind == "tsine") {
    f.kind = Kind::TemporalSine;
    const auto parts = split_list(args);
    if (parts.size() != 3)
      throw std::invalid_argument("tsine needs amp,freq,axis");
    f.amp = parse_double_or_throw(parts[0], "tsine amp");
    f.freq = parse_double_or_throw(parts[1], "tsine freq");
    f.axis = static_cast<int>(parse_int_or_throw(parts[2], "tsine axis"));
    if (f.axis < 1 || f.axis >= n)
      throw std::invalid_argument("tsine axis must be a spatial axis in [1, n-1]");
  } else {
    throw std::invalid_argument("unknown function '" + kind +
                                "' (whitelist: linear, tsine)");
  }
  return f;
}

SampledFunction FunctionSpec::instantiate(const std::vector<Vector>& grid) const {
  SampledFunction f;
  f.grid = grid;
  if (kind == Kind::Linear) {
    const Vector c = coeffs;
    f.value = [c](const Vector& x) { return c.dot(x); };
    f.gradient = [c](const Vector&) { return c; };
  } else {
    const double amp_ = amp, freq_ = freq;
    const int axis_ = axis;
    f.value = [amp_, freq_, axis_](const Vector& x) {
      return x[0] + amp_ * std::sin(freq_ * x[axis_]);
    };
    f.gradient = [amp_, freq_, axis_](const Vector& x) {
      Vector g = Vector::Zero(x.size());
      g[0] = 1.0;
      g[axis_] = amp_ * freq_ * std::cos(freq_ * x[axis_]);
      return g;
    };
  }
  return f;
}

std::string FunctionSpec::str() const {
  if (kind == Kind::Linear) {
    std::string out = "linear:";
    for (int i = 0; i < coeffs.size(); ++i) {
      if (i) out += ',';
      out += fmt(coeffs[i]);
    }
    return out;
  }
  return "tsine:" + fmt(amp) + "," + fmt(freq) + "," + std::to_string(axis);
}

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = strip(colon == std::string::npos ? text : text.substr(0, colon));
  FamilySpec f;
  if (kind == "boost") {
    f.kind = Kind::Boost;
    f.box = 50.0;
  } else if (kind == "tlin") {
    f.kind = Kind::TemporalLinear;
    f.box = 1.0;
  } else {
    throw std::invalid_argument("unknown family '" + kind + "' (whitelist: boost, tlin)");
  }
  if (colon != std::string::npos) {
    f.box = parse_double_or_throw(strip(text.substr(colon + 1)), "family box");
    if (!(f.box > 0.0)) throw std::invalid_argument("family box must be positive");
  }
  return f;
}

SteepFamily FamilySpec::instantiate(const SpacetimeModel& model) const {
  if (kind == Kind::Boost) {
    SteepFamily fam = make_boost_family(model.dimension(), box);
    if (model.kind() == ModelKind::Flrw) {
      // validate on a lattice inside the declared domain instead of the origin
      GridSpec grid;
      const int n = model.dimension();
      grid.lo = Vector::Constant(n, -3.0);
      grid.hi = Vector::Constant(n, 3.0);
      grid.lo[0] = model.time_domain().lo;
      grid.hi[0] = model.time_domain().hi;
      grid.counts.assign(n, 5);
      fam.validation_grid = grid.points();
    }
    return fam;
  }
  return make_temporal_linear_family(model, 5, box, 3.0);
}

std::string FamilySpec::str() const {
  return (kind == Kind::Boost ? std::string("boost:") : std::string("tlin:")) + fmt(box);
}

SpacetimeModel ModelSpec::instantiate() const {
  if (kind == ModelKind::Minkowski) return SpacetimeModel::minkowski(n);
  return SpacetimeModel::flrw(n, a, domain);
}

std::string ModelSpec::name() const { return instantiate().name(); }

namespace {

TaskType parse_task_type(const std::string& s) {
  if (s == "dist") return TaskType::Dist;
  if (s == "check-causal") return TaskType::CheckCausal;
  if (s == "check-steep") return TaskType::CheckSteep;
  if (s == "verify-clifford") return TaskType::VerifyClifford;
  if (s == "equivalence-scan") return TaskType::EquivalenceScan;
  if (s == "gap") return TaskType::Gap;
  throw std::invalid_argument("unknown task type '" + s + "'");
}

bool task_uses_randomness(const TaskSpec& t) {
  if (t.type == TaskType::EquivalenceScan || t.type == TaskType::Gap) return true;
  if (t.type == TaskType::Dist)
    return t.method == "oracle" || t.method == "steep" || t.method == "all";
  return false;
}

struct RawSection {
  std::string header;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> entries;
};

bool is_task_section(const std::string& header) {
  return header == "task" ||
         (header.rfind("task", 0) == 0 && header.size() > 4 &&
          (header[4] == ' ' || header[4] == '\t'));
}

}  // namespace

ScenarioConfig ScenarioConfig::parse(std::istream& in) {
  std::vector<RawSection> sections;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = strip(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']')
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": unterminated section header");
      sections.push_back({strip(text.substr(1, text.size() - 2)), lineno, {}});
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    if (sections.empty())
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": key/value outside any [section]");
    sections.back().entries.emplace_back(strip(text.substr(0, eq)),
                                         strip(text.substr(eq + 1)));
  }

  ScenarioConfig config;
  bool have_model = false;
  std::optional<double> t_min, t_max;
  std::string a_expr;

  // model and points first; task sections may precede them in the file
  for (const RawSection& sec : sections) {
    const std::string where = "line " + std::to_string(sec.line);
    if (sec.header == "model") {
      have_model = true;
      for (const auto& [key, value] : sec.entries) {
        if (key == "kind") {
          if (value == "minkowski") config.model.kind = ModelKind::Minkowski;
          else if (value == "flrw") config.model.kind = ModelKind::Flrw;
          else throw std::invalid_argument(where + ": unknown model kind '" + value + "'");
        } else if (key == "n") {
          config.model.n = static_cast<int>(parse_int_or_throw(value, "model n"));
        } else if (key == "a") {
          a_expr = value;
        } else if (key == "t_min") {
          t_min = parse_double_or_throw(value, "t_min");
        } else if (key == "t_max") {
          t_max = parse_double_or_throw(value, "t_max");
        } else {
          throw std::invalid_argument(where + ": unknown model key '" + key + "'");
        }
      }
    } else if (sec.header == "points") {
      for (const auto& [key, value] : sec.entries)
        config.points[key] = parse_vector(value, "point " + key);
    } else if (is_task_section(sec.header)) {
      continue;  // second pass
    } else {
      throw std::invalid_argument(where + ": unknown section [" + sec.header + "]");
    }
  }

  if (!have_model) throw std::invalid_argument("config has no [model] section");
  if (config.model.kind == ModelKind::Flrw) {
    if (a_expr.empty())
      throw std::invalid_argument("flrw model needs a scale factor 'a'");
    if (!t_min || !t_max)
      throw std::invalid_argument("flrw model needs t_min and t_max");
    config.model.a = ScaleFactor::parse(a_expr);
    config.model.domain = Interval{*t_min, *t_max};
  }
  config.model.instantiate();  // validates dimension and domain now

  for (const RawSection& sec : sections) {
    const std::string where = "line " + std::to_string(sec.line);
    if (is_task_section(sec.header)) {
      const std::string id = strip(sec.header.substr(4));
      if (id.empty())
        throw std::invalid_argument(where + ": task section needs a name: [task NAME]");
      TaskSpec task;
      task.id = id;
      bool have_type = false;
      std::optional<std::string> grid_min, grid_max, grid_counts;
      for (const auto& [key, value] : sec.entries) {
        if (key == "type") { task.type = parse_task_type(value); have_type = true; }
        else if (key == "p") task.p = value;
        else if (key == "q") task.q = value;
        else if (key == "method") task.method = value;
        else if (key == "segments") task.segments = static_cast<int>(parse_int_or_throw(value, "segments"));
        else if (key == "iterations") task.iterations = static_cast<int>(parse_int_or_throw(value, "iterations"));
        else if (key == "starts") task.starts = static_cast<int>(parse_int_or_throw(value, "starts"));
        else if (key == "trials") task.trials = static_cast<int>(parse_int_or_throw(value, "trials"));
        else if (key == "seed") {
          task.seed = static_cast<std::uint64_t>(parse_int_or_throw(value, "seed"));
          task.seed_given = true;
        }
        else if (key == "tol") task.tol = parse_double_or_throw(value, "tol");
        else if (key == "chi_sign") {
          const long s = parse_int_or_throw(value, "chi_sign");
          if (s != 1 && s != -1) throw std::invalid_argument(where + ": chi_sign must be +1 or -1");
          task.chi_sign = static_cast<int>(s);
        }
        else if (key == "route") {
          if (value == "gradient") task.route = CheckRoute::Gradient;
          else if (value == "operator") task.route = CheckRoute::Operator;
          else throw std::invalid_argument(where + ": route must be gradient or operator");
        }
        else if (key == "f") task.function = FunctionSpec::parse(value, config.model.n);
        else if (key == "family") task.family = FamilySpec::parse(value);
        else if (key == "grid_min") grid_min = value;
        else if (key == "grid_max") grid_max = value;
        else if (key == "grid_counts") grid_counts = value;
        else if (key == "gap_threshold") task.gap_threshold = parse_double_or_throw(value, "gap_threshold");
        else throw std::invalid_argument(where + ": unknown task key '" + key + "'");
      }
      if (!have_type)
        throw std::invalid_argument(where + ": task '" + id + "' has no type");
      if (grid_min || grid_max || grid_counts) {
        if (!(grid_min && grid_max && grid_counts))
          throw std::invalid_argument(where + ": grid needs grid_min, grid_max and grid_counts");
        GridSpec g;
        g.lo = parse_vector(*grid_min, "grid_min");
        g.hi = parse_vector(*grid_max, "grid_max");
        const auto counts = split_list(*grid_counts);
        for (const auto& c : counts)
          g.counts.push_back(static_cast<int>(parse_int_or_throw(c, "grid_counts")));
        task.grid = std::move(g);
      }
      config.tasks.push_back(std::move(task));
    }
  }

  for (const auto& [name, point] : config.points)
    if (point.size() != config.model.n)
      throw std::invalid_argument("point '" + name + "' has " +
                                  std::to_string(point.size()) +
                                  " coordinates, model dimension is " +
                                  std::to_string(config.model.n));

  std::set<std::string> task_ids;
  for (const TaskSpec& task : config.tasks) {
    if (!task_ids.insert(task.id).second)
      throw std::invalid_argument("duplicate task id '" + task.id + "'");
    if (task_uses_randomness(task) && !task.seed_given)
      throw std::invalid_argument("task '" + task.id +
                                  "' uses randomness and must declare an explicit seed");
    const bool needs_pair =
        task.type == TaskType::Dist || task.type == TaskType::Gap;
    if (needs_pair) {
      for (const std::string& name : {task.p, task.q}) {
        if (name.empty())
          throw std::invalid_argument("task '" + task.id + "' needs points p and q");
        if (config.points.find(name) == config.points.end())
          throw std::invalid_argument("task '" + task.id + "' references unknown point '" +
                                      name + "'");
      }
    }
    if ((task.type == TaskType::CheckCausal || task.type == TaskType::CheckSteep) &&
        (!task.function || !task.grid))
      throw std::invalid_argument("task '" + task.id + "' needs f and a grid");
  }
  return config;
}

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse(in);
}

const Vector& ScenarioConfig::resolve_point(const std::string& name) const {
  const auto it = points.find(name);
  if (it == points.end())
    throw std::invalid_argument("unknown point '" + name + "'");
  return it->second;
}

namespace {

std::string curve_certificate_text(const PolygonalCausalCurve& curve) {
  std::string out = "curve nodes (one chart point per line):\n";
  for (const Vector& node : curve.nodes) {
    out += fmt_point(node);
    out += '\n';
  }
  return out;
}

struct TaskRunner {
  const ScenarioConfig& config;
  const SpacetimeModel model;
  RunOutput& out;
  std::ostringstream summary;

  explicit TaskRunner(const ScenarioConfig& c, RunOutput& o)
      : config(c), model(c.model.instantiate()), out(o) {}

  ResultRow base_row(const TaskSpec& task) const {
    ResultRow row;
    row.task = task.id;
    row.model = model.name();
    row.n = model.dimension();
    row.seed = task.seed;
    row.tol = task.tol;
    return row;
  }

  void run_dist(const TaskSpec& task) {
    const Vector& p = config.resolve_point(task.p);
    const Vector& q = config.resolve_point(task.q);
    const bool all = task.method == "all";
    if (!all && task.method != "analytic" && task.method != "oracle" &&
        task.method != "steep")
      throw std::invalid_argument("task '" + task.id + "': unknown method '" +
                                  task.method + "'");
    std::string certificate;

    if (all || task.method == "analytic") {
      ResultRow row = base_row(task);
      row.p = fmt_point(p);
      row.q = fmt_point(q);
      row.method = "analytic";
      try {
        const DistanceResult res = analytic_distance(model, p, q);
        row.value = res.value;
        row.status = "ok";
        summary << task.id << ": analytic d = " << fmt(res.value) << "\n";
      } catch (const std::invalid_argument&) {
        row.status = "unsupported";
        summary << task.id << ": analytic unsupported for this pair\n";
      }
      out.rows.push_back(std::move(row));
    }
    if (all || task.method == "oracle") {
      OracleSettings settings;
      settings.segments = task.segments;
      settings.iterations = task.iterations;
      settings.starts = task.starts;
      settings.seed = task.seed;
      const DistanceResult res = oracle_distance(model, p, q, settings);
      ResultRow row = base_row(task);
      row.p = fmt_point(p);
      row.q = fmt_point(q);
      row.method = "curve-oracle";
      row.value = res.value;
      row.status = res.diagnostic.empty() ? "ok" : res.diagnostic;
      out.rows.push_back(std::move(row));
      summary << task.id << ": curve-oracle d >= " << fmt(res.value)
              << (res.diagnostic.empty() ? "" : " (" + res.diagnostic + ")") << "\n";
      if (res.curve_certificate)
        certificate += curve_certificate_text(*res.curve_certificate);
    }
    if (all || task.method == "steep") {
      const FamilySpec fspec = task.family.value_or(default_family());
      const SteepFamily family = fspec.instantiate(model);
      VariationalSettings settings;
      settings.starts = task.starts;
      settings.seed = task.seed;
      const DistanceResult res = steep_family_distance(model, family, p, q, settings);
      ResultRow row = base_row(task);
      row.p = fmt_point(p);
      row.q = fmt_point(q);
      row.method = "steep-variational";
      row.value = res.value;
      row.status = "ok";
      out.rows.push_back(std::move(row));
      summary << task.id << ": steep-variational (" << fspec.str()
              << ") d <= " << fmt(res.value) << "\n";
      if (res.parameter_certificate)
        certificate += "family " + fspec.str() +
                       " minimizing parameter: " + fmt_point(*res.parameter_certificate) +
                       "\n";
    }
    if (!certificate.empty()) out.certificates[task.id] = certificate;
  }

  FamilySpec default_family() const {
    FamilySpec f;
    if (model.kind() == ModelKind::Minkowski) {
      f.kind = FamilySpec::Kind::Boost;
      f.box = 50.0;
    } else {
      f.kind = FamilySpec::Kind::TemporalLinear;
      f.box = 1.0;
    }
    return f;
  }

  void run_check(const TaskSpec& task) {
    const CliffordModule cliff = build_gamma_matrices(model.dimension(), task.chi_sign);
    const SampledFunction f = task.function->instantiate(task.grid->points());
    const CheckPredicate predicate = task.type == TaskType::CheckCausal
                                         ? CheckPredicate::Causal
                                         : CheckPredicate::Steep;
    const CausalVerdict verdict =
        function_causal_on_grid(cliff, model, f, task.route, predicate, task.tol);
    ResultRow row = base_row(task);
    row.method = task.route == CheckRoute::Operator ? "operator" : "gradient";
    const bool flag = predicate == CheckPredicate::Causal ? verdict.causal : verdict.steep;
    row.value = flag ? 1.0 : 0.0;
    row.margin = verdict.margin;
    row.status = predicate == CheckPredicate::Causal ? (flag ? "causal" : "not-causal")
                                                     : (flag ? "steep" : "not-steep");
    summary << task.id << ": f = " << task.function->str() << " is " << row.status
            << " on the grid (worst margin " << fmt(verdict.margin) << ", "
            << row.method << " route)\n";
    out.rows.push_back(std::move(row));
  }

  void run_verify_clifford(const TaskSpec& task) {
    const CliffordModule cliff = build_gamma_matrices(model.dimension(), task.chi_sign);
    const CliffordReport report = verify_clifford(cliff, task.tol);
    ResultRow row = base_row(task);
    row.method = "identity-scan";
    row.value = report.max_deviation;
    row.status = report.passed ? "pass" : "fail";
    if (!report.passed) out.exit_code = 1;
    summary << task.id << ": clifford n=" << model.dimension() << " "
            << report.summary() << "\n";
    out.rows.push_back(std::move(row));
  }

  void run_equivalence_scan(const TaskSpec& task) {
    const CliffordModule cliff = build_gamma_matrices(model.dimension(), task.chi_sign);
    const EquivalenceReport report =
        equivalence_scan(cliff, model, task.trials, task.seed, task.tol);
    ResultRow row = base_row(task);
    row.method = "dual-route";
    const int checked = report.causal_checked + report.steep_checked;
    const int agreed = report.causal_agreed + report.steep_agreed;
    row.value = checked == 0 ? 1.0 : static_cast<double>(agreed) / checked;
    row.margin = report.max_discrepancy;
    row.status = report.passed ? "pass" : "fail";
    if (!report.passed) out.exit_code = 1;
    summary << task.id << ": " << report.summary() << "\n";
    out.rows.push_back(std::move(row));
  }

  void run_gap(const TaskSpec& task) {
    const Vector& p = config.resolve_point(task.p);
    const Vector& q = config.resolve_point(task.q);
    const FamilySpec fspec = task.family.value_or(default_family());
    const SteepFamily family = fspec.instantiate(model);
    OracleSettings oracle_settings;
    oracle_settings.segments = task.segments;
    oracle_settings.iterations = task.iterations;
    oracle_settings.starts = task.starts;
    oracle_settings.seed = task.seed;
    VariationalSettings variational_settings;
    variational_settings.starts = task.starts;
    variational_settings.seed = task.seed;
    const GapReport report = duality_gap(model, family, p, q, oracle_settings,
                                         variational_settings, task.gap_threshold);
    ResultRow row = base_row(task);
    row.p = fmt_point(p);
    row.q = fmt_point(q);
    row.method = "duality-gap";
    row.value = report.upper;
    row.gap = report.gap;
    row.status = report.family_adequate ? "ok" : "flagged";
    summary << task.id << ": " << report.summary() << "\n";
    out.rows.push_back(std::move(row));
    std::string certificate;
    if (report.oracle.curve_certificate)
      certificate += curve_certificate_text(*report.oracle.curve_certificate);
    if (report.variational.parameter_certificate)
      certificate += "family " + fspec.str() + " minimizing parameter: " +
                     fmt_point(*report.variational.parameter_certificate) + "\n";
    if (!certificate.empty()) out.certificates[task.id] = certificate;
  }

  void run(const TaskSpec& task) {
    switch (task.type) {
      case TaskType::Dist: run_dist(task); break;
      case TaskType::CheckCausal:
      case TaskType::CheckSteep: run_check(task); break;
      case TaskType::VerifyClifford: run_verify_clifford(task); break;
      case TaskType::EquivalenceScan: run_equivalence_scan(task); break;
      case TaskType::Gap: run_gap(task); break;
    }
  }
};

}  // namespace

RunOutput run_scenario(const ScenarioConfig& config) {
  RunOutput out;
  TaskRunner runner(config, out);
  for (const TaskSpec& task : config.tasks) runner.run(task);
  runner.summary << (out.exit_code == 0 ? "STATUS ok" : "STATUS verification failed")
                 << "\n";
  out.summary = runner.summary.str();
  return out;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string csv = "task,model,n,p,q,method,value,margin,gap,seed,tol,status\n";
  for (const ResultRow& r : rows) {
    csv += r.task + ',' + r.model + ',' + std::to_string(r.n) + ',' + r.p + ',' + r.q +
           ',' + r.method + ',';
    csv += (r.value ? fmt(*r.value) : std::string()) + ',';
    csv += (r.margin ? fmt(*r.margin) : std::string()) + ',';
    csv += (r.gap ? fmt(*r.gap) : std::string()) + ',';
    csv += std::to_string(r.seed) + ',' + fmt(r.tol) + ',' + r.status + '\n';
  }
  return csv;
}

void write_outputs(const RunOutput& output, const std::string& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  {
    std::ofstream csv(fs::path(outdir) / "results.csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write results.csv in " + outdir);
    csv << to_csv(output.rows);
  }
  for (const auto& [task, text] : output.certificates) {
    std::ofstream cert(fs::path(outdir) / (task + "_certificate.txt"), std::ios::binary);
    if (!cert) throw std::runtime_error("cannot write certificate for task " + task);
    cert << text;
  }
}

}  // namespace lodist
