#include "lodist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lodist {

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::Analytic: return "analytic";
    case DistanceMethod::CurveOracle: return "curve-oracle";
    case DistanceMethod::SteepVariational: return "steep-variational";
    case DistanceMethod::RiemannianBaseline: return "riemannian-baseline";
  }
  return "?";
}

namespace {

/// Squared spatial speed scaled by the metric at the segment midpoint:
/// g(v,v) = -1 + w for the t-parametrized velocity v = (1, u).
double segment_w(const SpacetimeModel& model, const Vector& from, const Vector& to) {
  const double dt = to[0] - from[0];
  const Vector mid = 0.5 * (from + to);
  const int n = model.dimension();
  double a2 = 1.0;
  if (model.kind() == ModelKind::Flrw) {
    model.require_in_domain(mid);
    const double a = model.scale_factor().value(mid[0]);
    a2 = a * a;
  }
  double usq = 0.0;
  for (int i = 1; i < n; ++i) {
    const double ui = (to[i] - from[i]) / dt;
    usq += ui * ui;
  }
  return a2 * usq;
}

}  // namespace

double curve_length(const SpacetimeModel& model, const PolygonalCausalCurve& curve,
                    double feasibility_tol) {
  const auto& nodes = curve.nodes;
  if (nodes.size() < 2) throw std::invalid_argument("curve needs at least two nodes");
  double length = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double dt = nodes[k + 1][0] - nodes[k][0];
    if (!(dt > 0.0))
      throw std::domain_error("curve t-coordinate must be strictly increasing");
    const double q = -1.0 + segment_w(model, nodes[k], nodes[k + 1]);
    if (q > feasibility_tol) {
      std::ostringstream os;
      os << "segment " << k << " has spacelike midpoint velocity (g(v,v) = " << q << ")";
      throw std::domain_error(os.str());
    }
    length += std::sqrt(std::max(0.0, -q)) * dt;
  }
  return length;
}

namespace {

double flrw_conformal_time(const ScaleFactor& a, double t) {
  // integral dt / a(t) for a = c * t^p
  if (a.power == 1.0) return std::log(t) / a.coeff;
  return std::pow(t, 1.0 - a.power) / (a.coeff * (1.0 - a.power));
}

double spatial_distance(const Vector& p, const Vector& q) {
  return (q - p).tail(q.size() - 1).norm();
}

}  // namespace

bool causally_reachable(const SpacetimeModel& model, const Vector& p, const Vector& q) {
  model.require_in_domain(p);
  model.require_in_domain(q);
  const double dt = q[0] - p[0];
  if (dt < 0.0) return false;
  const double dx = spatial_distance(p, q);
  if (model.kind() == ModelKind::Minkowski) return dx <= dt;
  // FLRW: comoving reach of a null curve is the conformal-time difference.
  const ScaleFactor& a = model.scale_factor();
  return dx <= flrw_conformal_time(a, q[0]) - flrw_conformal_time(a, p[0]);
}

DistanceResult analytic_distance(const SpacetimeModel& model, const Vector& p,
                                 const Vector& q) {
  model.require_in_domain(p);
  model.require_in_domain(q);
  DistanceResult r;
  r.method = DistanceMethod::Analytic;
  if (model.kind() == ModelKind::Minkowski) {
    const double dt = q[0] - p[0];
    const double dx = spatial_distance(p, q);
    r.value = (dt >= 0.0 && dt >= dx) ? std::sqrt(dt * dt - dx * dx) : 0.0;
    return r;
  }
  if (spatial_distance(p, q) > 0.0)
    throw std::invalid_argument(
        "analytic_distance: FLRW supports comoving pairs only (equal spatial "
        "coordinates)");
  r.value = pos_part(q[0] - p[0]);
  return r;
}

PolygonalCausalCurve straight_chart_curve(const Vector& p, const Vector& q, int segments) {
  if (segments < 1) throw std::invalid_argument("segments must be >= 1");
  PolygonalCausalCurve c;
  c.nodes.reserve(segments + 1);
  for (int k = 0; k <= segments; ++k) {
    const double s = static_cast<double>(k) / segments;
    c.nodes.push_back(p + s * (q - p));
  }
  return c;
}

namespace {

/// Feasibility sweep: walk the segments forward and scale down any
/// overspeeding spatial velocity so the segment sits inside the cone at
/// speed (1 - cone_margin). The last node is pinned, so a violation there
/// makes the candidate infeasible.
bool project_into_cone(const SpacetimeModel& model, std::vector<Vector>& nodes,
                       double cone_margin) {
  const std::size_t m = nodes.size();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double w = segment_w(model, nodes[k], nodes[k + 1]);
    if (w <= 1.0) continue;
    const double scale = (1.0 - cone_margin) / std::sqrt(w);
    if (k + 2 == m) return false;  // endpoint pinned
    const int n = static_cast<int>(nodes[k].size());
    for (int i = 1; i < n; ++i)
      nodes[k + 1][i] = nodes[k][i] + scale * (nodes[k + 1][i] - nodes[k][i]);
  }
  return true;
}

double curve_length_unchecked(const SpacetimeModel& model, const std::vector<Vector>& nodes) {
  double length = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double dt = nodes[k + 1][0] - nodes[k][0];
    const double q = -1.0 + segment_w(model, nodes[k], nodes[k + 1]);
    length += std::sqrt(std::max(0.0, -q)) * dt;
  }
  return length;
}

bool curve_feasible(const SpacetimeModel& model, const std::vector<Vector>& nodes,
                    double tol = 1e-12) {
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
    if (-1.0 + segment_w(model, nodes[k], nodes[k + 1]) > tol) return false;
  return true;
}

/// d(length)/d(spatial node positions); interior nodes only. The metric of
/// the built-in models depends on t alone, so only the two adjacent
/// segments contribute.
void length_gradient(const SpacetimeModel& model, const std::vector<Vector>& nodes,
                     std::vector<Vector>& grad) {
  const int n = static_cast<int>(nodes[0].size());
  const std::size_t m = nodes.size();
  grad.assign(m, Vector::Zero(n - 1));
  constexpr double kFloor = 1e-9;  // keeps the gradient finite near null segments

  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double dt = nodes[k + 1][0] - nodes[k][0];
    const Vector mid = 0.5 * (nodes[k] + nodes[k + 1]);
    double a2 = 1.0;
    if (model.kind() == ModelKind::Flrw) {
      const double a = model.scale_factor().value(mid[0]);
      a2 = a * a;
    }
    Vector u(n - 1);
    for (int i = 1; i < n; ++i) u[i - 1] = (nodes[k + 1][i] - nodes[k][i]) / dt;
    const double q = -1.0 + a2 * u.squaredNorm();
    const double root = std::sqrt(std::max(kFloor, -q));
    const Vector d = (a2 / root) * u;  // -d(sqrt(-q))/du
    // segment k depends on x_k (via -u) and x_{k+1} (via +u)
    grad[k] += d;
    grad[k + 1] -= d;
  }
}

}  // namespace

namespace detail {

double ascend_curve(const SpacetimeModel& model, PolygonalCausalCurve& curve,
                    const OracleSettings& settings) {
  auto& nodes = curve.nodes;
  const std::size_t m = nodes.size();
  const int n = static_cast<int>(nodes[0].size());
  if (m < 3) return curve_length_unchecked(model, nodes);

  double best = curve_length_unchecked(model, nodes);
  const double span = std::max(1.0, (nodes.back() - nodes.front()).norm());
  double radius = 0.05 * span;
  std::vector<Vector> grad;

  for (int iter = 0; iter < settings.iterations; ++iter) {
    length_gradient(model, nodes, grad);
    double gmax = 0.0;
    for (std::size_t k = 1; k + 1 < m; ++k)
      gmax = std::max(gmax, grad[k].lpNorm<Eigen::Infinity>());
    if (gmax == 0.0) break;

    bool accepted = false;
    while (radius > 1e-14 * span) {
      std::vector<Vector> trial = nodes;
      const double step = radius / gmax;
      for (std::size_t k = 1; k + 1 < m; ++k)
        for (int i = 1; i < n; ++i) trial[k][i] += step * grad[k][i - 1];
      if (project_into_cone(model, trial, settings.cone_margin) &&
          curve_feasible(model, trial)) {
        const double value = curve_length_unchecked(model, trial);
        if (value > best) {
          if (value - best < settings.improvement_tol) {
            nodes = std::move(trial);
            return value;
          }
          nodes = std::move(trial);
          best = value;
          radius = std::min(radius * 1.5, 0.5 * span);
          accepted = true;
          break;
        }
      }
      radius *= 0.5;
    }
    if (!accepted) break;
  }
  return best;
}

}  // namespace detail

namespace {

/// Greedy feasible initial curve: move toward the target spatial position as
/// fast as the cone allows on each segment. Succeeds for every strictly
/// reachable pair.
bool greedy_feasible_curve(const SpacetimeModel& model, std::vector<Vector>& nodes,
                           double cone_margin) {
  const std::size_t m = nodes.size();
  const int n = static_cast<int>(nodes[0].size());
  const Vector target = nodes.back();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double dt = nodes[k + 1][0] - nodes[k][0];
    Vector want = target - nodes[k];
    want[0] = 0.0;
    const double dist = want.norm();
    if (dist == 0.0) {
      for (int i = 1; i < n; ++i) nodes[k + 1][i] = nodes[k][i];
      continue;
    }
    double a_mid = 1.0;
    if (model.kind() == ModelKind::Flrw)
      a_mid = model.scale_factor().value(nodes[k][0] + 0.5 * dt);
    const double reach = (1.0 - cone_margin) * dt / a_mid;
    if (k + 2 == m) {
      // last segment must land exactly on the target
      if (dist > reach * (1.0 + 1e-9)) return false;
      break;
    }
    const double step = std::min(dist, reach);
    for (int i = 1; i < n; ++i)
      nodes[k + 1][i] = nodes[k][i] + step * want[i] / dist;
  }
  return curve_feasible(model, nodes, 1e-9);
}

}  // namespace

DistanceResult oracle_distance(const SpacetimeModel& model, const Vector& p,
                               const Vector& q, const OracleSettings& settings) {
  DistanceResult r;
  r.method = DistanceMethod::CurveOracle;
  if (!causally_reachable(model, p, q)) {
    r.value = 0.0;
    r.diagnostic = "unreachable";
    return r;
  }
  if (q[0] == p[0]) {
    // reachable with zero time separation means p == q spatially
    r.value = 0.0;
    r.diagnostic = "degenerate pair";
    return r;
  }

  const PolygonalCausalCurve straight = straight_chart_curve(p, q, settings.segments);
  PolygonalCausalCurve best_curve;
  double best = -1.0;
  const int n = model.dimension();
  const double spatial_scale =
      std::max({1.0, spatial_distance(p, q), std::abs(q[0] - p[0])});

  for (int start = 0; start < std::max(1, settings.starts); ++start) {
    PolygonalCausalCurve curve = straight;
    bool feasible = curve_feasible(model, curve.nodes, 1e-12);
    if (start > 0) {
      // seeded interior perturbation, zero at the endpoints
      Rng rng(settings.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(start));
      double rho = 0.25 * spatial_scale * start / std::max(1, settings.starts);
      for (int attempt = 0; attempt < 8; ++attempt) {
        PolygonalCausalCurve trial = straight;
        const std::size_t m = trial.nodes.size();
        for (std::size_t k = 1; k + 1 < m; ++k) {
          const double bump = std::sin(M_PI * static_cast<double>(k) / (m - 1));
          for (int i = 1; i < n; ++i)
            trial.nodes[k][i] += rho * bump * rng.uniform(-1.0, 1.0);
        }
        if (project_into_cone(model, trial.nodes, settings.cone_margin) &&
            curve_feasible(model, trial.nodes)) {
          curve = std::move(trial);
          feasible = true;
          break;
        }
        rho *= 0.5;
      }
    } else if (!feasible) {
      if (!project_into_cone(model, curve.nodes, settings.cone_margin) ||
          !curve_feasible(model, curve.nodes)) {
        curve = straight;
        if (!greedy_feasible_curve(model, curve.nodes, settings.cone_margin)) continue;
      }
      feasible = true;
    }
    if (!feasible) continue;

    const double value = detail::ascend_curve(model, curve, settings);
    if (value > best) {
      best = value;
      best_curve = std::move(curve);
    }
  }

  if (best < 0.0) {
    r.value = 0.0;
    r.diagnostic = "no feasible curve found";
    return r;
  }
  r.value = best;
  r.curve_certificate = std::move(best_curve);
  return r;
}

SteepFamily make_boost_family(int n, double box_half_width) {
  if (n < 2) throw std::invalid_argument("boost family: dimension must be >= 2");
  SteepFamily fam;
  fam.param_dim = n - 1;
  fam.lo = Vector::Constant(n - 1, -box_half_width);
  fam.hi = Vector::Constant(n - 1, box_half_width);
  fam.value = [](const Vector& theta, const Vector& x) {
    const double u0 = std::sqrt(1.0 + theta.squaredNorm());
    double v = u0 * x[0];
    for (int i = 0; i < theta.size(); ++i) v -= theta[i] * x[i + 1];
    return v;
  };
  fam.gradient = [](const Vector& theta, const Vector& x) {
    Vector df(x.size());
    df[0] = std::sqrt(1.0 + theta.squaredNorm());
    for (int i = 0; i < theta.size(); ++i) df[i + 1] = -theta[i];
    return df;
  };
  // The steepness constraint of this family does not depend on the point;
  // a single origin sample is still validated to honor the contract.
  fam.validation_grid = {Vector::Zero(n)};
  return fam;
}

SteepFamily make_temporal_linear_family(const SpacetimeModel& model,
                                        int grid_points_per_axis,
                                        double box_half_width, double spatial_extent) {
  const int n = model.dimension();
  SteepFamily fam;
  fam.param_dim = n - 1;
  fam.lo = Vector::Constant(n - 1, -box_half_width);
  fam.hi = Vector::Constant(n - 1, box_half_width);
  fam.value = [](const Vector& theta, const Vector& x) {
    double v = x[0];
    for (int i = 0; i < theta.size(); ++i) v += theta[i] * x[i + 1];
    return v;
  };
  fam.gradient = [](const Vector& theta, const Vector& x) {
    Vector df(x.size());
    df[0] = 1.0;
    for (int i = 0; i < theta.size(); ++i) df[i + 1] = theta[i];
    return df;
  };
  GridSpec grid;
  grid.lo = Vector::Constant(n, -spatial_extent);
  grid.hi = Vector::Constant(n, spatial_extent);
  if (model.kind() == ModelKind::Flrw) {
    grid.lo[0] = model.time_domain().lo;
    grid.hi[0] = model.time_domain().hi;
  } else {
    grid.lo[0] = -spatial_extent;
    grid.hi[0] = spatial_extent;
  }
  grid.counts.assign(n, std::max(2, grid_points_per_axis));
  fam.validation_grid = grid.points();
  return fam;
}

bool family_member_is_steep(const SpacetimeModel& model, const SteepFamily& family,
                            const Vector& theta) {
  for (const Vector& x : family.validation_grid) {
    const CovectorSample sample{x, family.gradient(theta, x)};
    if (!gradient_steep_check(model, sample, family.steep_slack).steep) return false;
  }
  return true;
}

namespace {

struct FamilyObjective {
  const SpacetimeModel& model;
  const SteepFamily& family;
  const Vector& p;
  const Vector& q;

  /// f_theta(q) - f_theta(p), or +inf for members failing grid validation.
  double operator()(const Vector& theta) const {
    if (!family_member_is_steep(model, family, theta))
      return std::numeric_limits<double>::infinity();
    return family.value(theta, q) - family.value(theta, p);
  }
};

Vector clamp_to_box(Vector theta, const Vector& lo, const Vector& hi) {
  for (int i = 0; i < theta.size(); ++i) theta[i] = std::clamp(theta[i], lo[i], hi[i]);
  return theta;
}

/// Compass (pattern) search with expansion/contraction, stopping when the
/// step drops below step_tol, the eval budget runs out, or the objective
/// reaches zero (the positive part cannot improve below that).
double compass_minimize(const FamilyObjective& objective, Vector& theta,
                        const SteepFamily& family, const VariationalSettings& settings,
                        double box_scale) {
  double value = objective(theta);
  if (std::isinf(value)) return value;
  double step = 0.125 * box_scale;
  const int k = static_cast<int>(theta.size());
  long budget = settings.max_evals;

  while (step > settings.step_tol && budget > 0 && value > 0.0) {
    bool improved = false;
    for (int i = 0; i < k && budget > 0; ++i) {
      for (const double dir : {+1.0, -1.0}) {
        Vector trial = theta;
        trial[i] = std::clamp(trial[i] + dir * step, family.lo[i], family.hi[i]);
        if (trial[i] == theta[i]) continue;
        const double tv = objective(trial);
        --budget;
        if (tv < value) {
          theta = std::move(trial);
          value = tv;
          improved = true;
          break;
        }
      }
    }
    if (improved)
      step = std::min(step * 2.0, box_scale);
    else
      step *= 0.5;
  }
  return value;
}

/// One pass of per-coordinate quadratic refinement around the compass
/// minimum; keeps only improving moves.
double coordinate_refine(const FamilyObjective& objective, Vector& theta, double value,
                         const SteepFamily& family, double h) {
  if (!(value > 0.0)) return value;
  for (int i = 0; i < theta.size(); ++i) {
    Vector tp = theta, tm = theta;
    tp[i] = std::clamp(theta[i] + h, family.lo[i], family.hi[i]);
    tm[i] = std::clamp(theta[i] - h, family.lo[i], family.hi[i]);
    const double fp = objective(tp);
    const double fm = objective(tm);
    if (std::isinf(fp) || std::isinf(fm)) continue;
    const double denom = fp - 2.0 * value + fm;
    if (denom <= 0.0) continue;
    const double shift = 0.5 * (fm - fp) / denom * h;
    Vector trial = theta;
    trial[i] = std::clamp(theta[i] + shift, family.lo[i], family.hi[i]);
    const double tv = objective(trial);
    if (tv < value) {
      theta = std::move(trial);
      value = tv;
    }
  }
  return value;
}

}  // namespace

DistanceResult steep_family_distance(const SpacetimeModel& model,
                                     const SteepFamily& family, const Vector& p,
                                     const Vector& q,
                                     const VariationalSettings& settings) {
  model.require_in_domain(p);
  model.require_in_domain(q);
  if (family.param_dim < 0 || family.lo.size() != family.param_dim ||
      family.hi.size() != family.param_dim)
    throw std::invalid_argument("steep family: malformed parameter box");

  const FamilyObjective objective{model, family, p, q};
  const double box_scale = std::max(1.0, (family.hi - family.lo).lpNorm<Eigen::Infinity>());

  DistanceResult r;
  r.method = DistanceMethod::SteepVariational;

  double best = std::numeric_limits<double>::infinity();
  Vector best_theta;

  const Vector center = 0.5 * (family.lo + family.hi);
  for (int start = 0; start < std::max(1, settings.starts); ++start) {
    Vector theta = center;
    if (start > 0) {
      Rng rng(settings.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(start));
      for (int i = 0; i < family.param_dim; ++i)
        theta[i] = rng.uniform(family.lo[i], family.hi[i]) * start /
                   std::max(1, settings.starts);
      theta = clamp_to_box(std::move(theta), family.lo, family.hi);
    }
    double value = compass_minimize(objective, theta, family, settings, box_scale);
    if (std::isinf(value)) continue;
    value = coordinate_refine(objective, theta, value, family,
                              std::max(settings.step_tol * 100.0, 1e-6 * box_scale));
    if (value < best) {
      best = value;
      best_theta = theta;
      if (best <= 0.0) break;
    }
  }

  if (std::isinf(best))
    throw std::invalid_argument(
        "steep_family_distance: no grid-steep member found (empty feasible set)");

  r.value = pos_part(best);
  r.parameter_certificate = best_theta;
  return r;
}

double riemannian_baseline(const Vector& p, const Vector& q) {
  // Affine family parametrized by its gradient u, constrained to |u| <= 1;
  // projected gradient ascent on u . (q - p).
  const Vector d = q - p;
  const double dnorm = d.norm();
  if (dnorm == 0.0) return 0.0;
  const double step = 2.0 / dnorm;
  Vector u = Vector::Zero(d.size());
  for (int iter = 0; iter < 8; ++iter) {
    u += step * d;
    const double norm = u.norm();
    if (norm > 1.0) u /= norm;
  }
  return std::abs(u.dot(d));
}

double riemannian_baseline(const Vector& p, const Vector& q,
                           std::span<const Vector> affine_gradients) {
  const Vector d = q - p;
  double best = 0.0;
  for (const Vector& u : affine_gradients) {
    if (u.size() != d.size()) throw std::invalid_argument("affine gradient dimension");
    if (u.norm() > 1.0 + 1e-12) continue;
    best = std::max(best, std::abs(u.dot(d)));
  }
  return best;
}

std::string GapReport::summary() const {
  std::ostringstream os;
  os << "lower(curve-oracle) = " << lower << ", upper(steep-variational) = " << upper
     << ", gap = " << gap;
  if (!family_adequate) os << "  [family too small to close the gap at threshold "
                           << flag_threshold << "]";
  return os.str();
}

GapReport duality_gap(const SpacetimeModel& model, const SteepFamily& family,
                      const Vector& p, const Vector& q,
                      const OracleSettings& oracle_settings,
                      const VariationalSettings& variational_settings,
                      double flag_threshold) {
  GapReport report;
  report.oracle = oracle_distance(model, p, q, oracle_settings);
  report.variational = steep_family_distance(model, family, p, q, variational_settings);
  report.lower = report.oracle.value;
  report.upper = report.variational.value;
  report.gap = report.upper - report.lower;
  report.flag_threshold = flag_threshold;
  report.family_adequate = report.gap <= flag_threshold;
  return report;
}

}  // namespace lodist
