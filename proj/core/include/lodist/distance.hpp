#ifndef LODIST_DISTANCE_HPP
#define LODIST_DISTANCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lodist/causal.hpp"
#include "lodist/spacetime.hpp"
#include "lodist/types.hpp"

namespace lodist {

/// [alpha]^+ = max{0, alpha}.
inline double pos_part(double alpha) { return alpha > 0.0 ? alpha : 0.0; }

/// Discretized future-directed causal curve: chart nodes with strictly
/// increasing t-coordinate; every segment's midpoint velocity must be causal.
struct PolygonalCausalCurve {
  std::vector<Vector> nodes;
};

/// Midpoint-rule Lorentzian length sum( sqrt(-g(v,v)) * dt ). Throws
/// std::domain_error if a segment's midpoint velocity is spacelike beyond
/// tolerance or t is not strictly increasing.
double curve_length(const SpacetimeModel& model, const PolygonalCausalCurve& curve,
                    double feasibility_tol = 1e-9);

enum class DistanceMethod { Analytic, CurveOracle, SteepVariational, RiemannianBaseline };
std::string to_string(DistanceMethod m);

struct DistanceResult {
  double value = 0.0;
  DistanceMethod method = DistanceMethod::Analytic;
  std::optional<PolygonalCausalCurve> curve_certificate;
  std::optional<Vector> parameter_certificate;
  std::string diagnostic;  // empty on success; "unreachable", ...
};

/// Closed-form distance. Supported: Minkowski (any pair) and FLRW comoving
/// pairs (equal spatial coordinates). Throws std::invalid_argument otherwise.
DistanceResult analytic_distance(const SpacetimeModel& model, const Vector& p,
                                 const Vector& q);

/// Exact causal-reachability test for the built-in models (Minkowski cone
/// condition; FLRW via conformal time).
bool causally_reachable(const SpacetimeModel& model, const Vector& p, const Vector& q);

struct OracleSettings {
  int segments = 64;
  int iterations = 400;
  int starts = 8;  // start 0 is the straight chart line, the rest perturbed
  std::uint64_t seed = 1;
  double improvement_tol = 1e-10;
  double cone_margin = 1e-6;
};

/// Proper-time maximization over polygonal curves with uniform t-nodes;
/// spatial node positions are optimized by projected ascent with
/// backtracking. The result is a lower bound on the distance by
/// construction; unreachable pairs yield exactly 0 with a diagnostic.
DistanceResult oracle_distance(const SpacetimeModel& model, const Vector& p,
                               const Vector& q, const OracleSettings& settings = {});

/// Straight chart line from p to q with the given number of uniform-t
/// segments (the oracle's start 0).
PolygonalCausalCurve straight_chart_curve(const Vector& p, const Vector& q, int segments);

/// Finite-dimensional parametrized family of candidate steep functions.
/// A parameter is usable only if the member passes the gradient steepness
/// check (with `steep_slack`) at every validation grid point.
struct SteepFamily {
  int param_dim = 0;
  Vector lo;
  Vector hi;
  std::function<double(const Vector& theta, const Vector& x)> value;
  std::function<Vector(const Vector& theta, const Vector& x)> gradient;
  std::vector<Vector> validation_grid;
  double steep_slack = 1e-8;
};

/// Boost family on Minkowski: f_theta(x) = sqrt(1+|theta|^2) x^0 - theta . x,
/// theta in [-box, box]^{n-1}. Exactly steep for every theta.
SteepFamily make_boost_family(int n, double box_half_width = 50.0);

/// f_c(x) = x^0 + c . x on an FLRW model, validated on a lattice spanning the
/// model's t-domain; only near-zero c survives validation unless a(t) is
/// large.
SteepFamily make_temporal_linear_family(const SpacetimeModel& model,
                                        int grid_points_per_axis = 5,
                                        double box_half_width = 1.0,
                                        double spatial_extent = 3.0);

bool family_member_is_steep(const SpacetimeModel& model, const SteepFamily& family,
                            const Vector& theta);

struct VariationalSettings {
  int starts = 8;
  int max_evals = 6000;  // per start
  std::uint64_t seed = 1;
  double step_tol = 1e-9;
};

/// min over grid-steep members of [f_theta(q) - f_theta(p)]^+ by seeded
/// multi-start compass descent with coordinate refinement. Upper bound on
/// the distance. Throws std::invalid_argument if no grid-steep member is
/// found.
DistanceResult steep_family_distance(const SpacetimeModel& model,
                                     const SteepFamily& family, const Vector& p,
                                     const Vector& q,
                                     const VariationalSettings& settings = {});

/// Riemannian baseline on a flat Euclidean chart: sup |f(q)-f(p)| over
/// affine f with |grad f| <= 1. The parametric overload maximizes over the
/// whole unit ball of gradients; the explicit overload scans a finite family
/// (members with |grad| > 1 are skipped).
double riemannian_baseline(const Vector& p, const Vector& q);
double riemannian_baseline(const Vector& p, const Vector& q,
                           std::span<const Vector> affine_gradients);

struct GapReport {
  double lower = 0.0;  // curve oracle
  double upper = 0.0;  // steep variational
  double gap = 0.0;
  double flag_threshold = 0.0;
  bool family_adequate = false;
  DistanceResult oracle;
  DistanceResult variational;

  std::string summary() const;
};

/// Sandwiches the distance between the curve oracle (below) and the steep
/// variational value (above) and reports the gap; families too small to
/// close the gap are flagged, never asserted against.
GapReport duality_gap(const SpacetimeModel& model, const SteepFamily& family,
                      const Vector& p, const Vector& q,
                      const OracleSettings& oracle_settings = {},
                      const VariationalSettings& variational_settings = {},
                      double flag_threshold = 1e-2);

namespace detail {
/// Projected-ascent pass over one curve; returns the final length. Exposed
/// so tests can drive the optimizer from deliberately bad starts.
double ascend_curve(const SpacetimeModel& model, PolygonalCausalCurve& curve,
                    const OracleSettings& settings);
}  // namespace detail

}  // namespace lodist

#endif
