#include "lodist/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lodist {

namespace {

struct GradientQuantities {
  double norm_sq;       // g^{mu nu} f_{,mu} f_{,nu}
  double past_margin;   // -f_{,0}
};

GradientQuantities gradient_quantities(const SpacetimeModel& model,
                                       const CovectorSample& sample) {
  model.require_in_domain(sample.point);
  if (sample.components.size() != model.dimension())
    throw std::domain_error("covector dimension does not match model");
  if (!sample.components.allFinite())
    throw std::domain_error("covector components must be finite");
  const Matrix gi = model.inverse_metric_at(sample.point);
  return {sample.components.dot(gi * sample.components), -sample.components[0]};
}

double largest_eigenvalue(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solver failed");
  return solver.eigenvalues().maxCoeff();
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (dev > 1e-10 * scale) {
    std::ostringstream os;
    os << what << " is not Hermitian (deviation " << dev
       << "); the Clifford module is corrupt";
    throw std::runtime_error(os.str());
  }
}

ComplexMatrix action_matrix(const CliffordModule& cliff, const SpacetimeModel& model,
                            const CovectorSample& sample) {
  if (cliff.n != model.dimension())
    throw std::invalid_argument("Clifford module dimension does not match model");
  const FrameAtPoint frame = model.frame_at(sample.point);
  ComplexMatrix m = clifford_action(cliff, frame, sample.components);
  require_hermitian(m, "J[D,f]");
  return m;
}

}  // namespace

CausalVerdict gradient_causal_check(const SpacetimeModel& model,
                                    const CovectorSample& sample, double tol) {
  const auto [norm_sq, past] = gradient_quantities(model, sample);
  CausalVerdict v;
  v.route = CheckRoute::Gradient;
  v.margin = std::max(norm_sq, past);
  v.causal = v.margin <= tol;
  v.steep = std::max(norm_sq + 1.0, past) <= tol;
  return v;
}

CausalVerdict gradient_steep_check(const SpacetimeModel& model,
                                   const CovectorSample& sample, double tol) {
  const auto [norm_sq, past] = gradient_quantities(model, sample);
  CausalVerdict v;
  v.route = CheckRoute::Gradient;
  v.margin = std::max(norm_sq + 1.0, past);
  v.steep = v.margin <= tol;
  v.causal = std::max(norm_sq, past) <= tol;
  return v;
}

CausalVerdict operator_causal_check(const CliffordModule& cliff,
                                    const SpacetimeModel& model,
                                    const CovectorSample& sample, double tol) {
  const ComplexMatrix m = action_matrix(cliff, model, sample);
  CausalVerdict v;
  v.route = CheckRoute::Operator;
  v.margin = largest_eigenvalue(m);
  v.causal = v.margin <= tol;
  // Steep margin via the same operator criteria, for the combined flag.
  const CausalVerdict sv = operator_steep_check(cliff, model, sample, tol);
  v.steep = sv.steep;
  return v;
}

CausalVerdict operator_steep_check(const CliffordModule& cliff,
                                   const SpacetimeModel& model,
                                   const CovectorSample& sample, double tol) {
  const ComplexMatrix m = action_matrix(cliff, model, sample);
  CausalVerdict v;
  v.route = CheckRoute::Operator;
  if (cliff.n % 2 == 0) {
    if (!cliff.chi)
      throw std::invalid_argument("operator_steep_check: even module lacks chirality");
    const ComplexMatrix shifted = m + Complex(0.0, 1.0) * (cliff.J * (*cliff.chi));
    require_hermitian(shifted, "J([D,f] + i chi)");
    v.margin = largest_eigenvalue(shifted);
  } else {
    // Odd n: the constraint splits into two inequalities.
    const double plus = largest_eigenvalue(ComplexMatrix(m + cliff.J));
    const double minus = largest_eigenvalue(ComplexMatrix(m - cliff.J));
    v.margin = std::max(plus, minus);
  }
  v.steep = v.margin <= tol;
  v.causal = largest_eigenvalue(m) <= tol;
  return v;
}

std::string EquivalenceReport::summary() const {
  std::ostringstream os;
  os << (passed ? "pass" : "FAIL") << ": causal " << causal_agreed << "/" << causal_checked
     << ", steep " << steep_agreed << "/" << steep_checked << " (of " << trials
     << " trials), max discrepancy " << max_discrepancy;
  for (const auto& f : failures) {
    os << "\n  disagreement (" << f.predicate << ") at point [";
    for (int i = 0; i < f.point.size(); ++i) os << (i ? " " : "") << f.point[i];
    os << "], df [";
    for (int i = 0; i < f.components.size(); ++i) os << (i ? " " : "") << f.components[i];
    os << "]: gradient margin " << f.gradient_margin << ", operator margin "
       << f.operator_margin;
  }
  return os.str();
}

EquivalenceReport equivalence_scan(const CliffordModule& cliff,
                                   const SpacetimeModel& model, int trials,
                                   std::uint64_t seed, double tol) {
  if (trials < 0) throw std::invalid_argument("equivalence_scan: trials must be >= 0");
  Rng rng(seed);
  const int n = model.dimension();
  const double band = 10.0 * tol;

  EquivalenceReport report;
  report.trials = trials;

  for (int trial = 0; trial < trials; ++trial) {
    Vector point(n);
    if (model.kind() == ModelKind::Flrw) {
      const Interval dom = model.time_domain();
      point[0] = rng.uniform(dom.lo, dom.hi);
    } else {
      point[0] = rng.uniform(-3.0, 3.0);
    }
    for (int i = 1; i < n; ++i) point[i] = rng.uniform(-3.0, 3.0);
    const CovectorSample sample{point, rng.uniform_vector(n, -3.0, 3.0)};

    const CausalVerdict gc = gradient_causal_check(model, sample, tol);
    const CausalVerdict oc = operator_causal_check(cliff, model, sample, tol);
    if (std::abs(gc.margin) >= band && std::abs(oc.margin) >= band) {
      ++report.causal_checked;
      if (gc.causal == oc.causal) {
        ++report.causal_agreed;
      } else {
        const double disc = std::min(std::abs(gc.margin), std::abs(oc.margin));
        report.max_discrepancy = std::max(report.max_discrepancy, disc);
        if (report.failures.size() < 10)
          report.failures.push_back(
              {sample.point, sample.components, gc.margin, oc.margin, "causal"});
      }
    }

    const CausalVerdict gs = gradient_steep_check(model, sample, tol);
    const CausalVerdict os = operator_steep_check(cliff, model, sample, tol);
    if (std::abs(gs.margin) >= band && std::abs(os.margin) >= band) {
      ++report.steep_checked;
      if (gs.steep == os.steep) {
        ++report.steep_agreed;
      } else {
        const double disc = std::min(std::abs(gs.margin), std::abs(os.margin));
        report.max_discrepancy = std::max(report.max_discrepancy, disc);
        if (report.failures.size() < 10)
          report.failures.push_back(
              {sample.point, sample.components, gs.margin, os.margin, "steep"});
      }
    }
  }

  report.passed = report.causal_agreed == report.causal_checked &&
                  report.steep_agreed == report.steep_checked;
  return report;
}

std::vector<Vector> GridSpec::points() const {
  const int dim = static_cast<int>(lo.size());
  if (hi.size() != dim || static_cast<int>(counts.size()) != dim)
    throw std::invalid_argument("grid: lo/hi/counts dimensions disagree");
  long long total = 1;
  for (int c : counts) {
    if (c < 1) throw std::invalid_argument("grid: counts must be >= 1");
    total *= c;
    if (total > 2'000'000) throw std::invalid_argument("grid: too many points");
  }
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(total));
  std::vector<int> idx(dim, 0);
  for (long long k = 0; k < total; ++k) {
    Vector x(dim);
    for (int i = 0; i < dim; ++i)
      x[i] = counts[i] == 1 ? lo[i]
                            : lo[i] + (hi[i] - lo[i]) * idx[i] / (counts[i] - 1);
    pts.push_back(std::move(x));
    for (int i = dim - 1; i >= 0; --i) {
      if (++idx[i] < counts[i]) break;
      idx[i] = 0;
    }
  }
  return pts;
}

namespace {

/// Central finite differences of f.value, falling back to one-sided steps
/// when a probe leaves the model domain.
Vector finite_difference_gradient(const SpacetimeModel& model, const SampledFunction& f,
                                  const Vector& x, double h) {
  const int n = static_cast<int>(x.size());
  Vector g(n);
  for (int i = 0; i < n; ++i) {
    Vector xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const bool ok_p = model.in_domain(xp);
    const bool ok_m = model.in_domain(xm);
    if (ok_p && ok_m) {
      g[i] = (f.value(xp) - f.value(xm)) / (2.0 * h);
    } else if (ok_p) {
      g[i] = (f.value(xp) - f.value(x)) / h;
    } else if (ok_m) {
      g[i] = (f.value(x) - f.value(xm)) / h;
    } else {
      throw std::domain_error("finite-difference probe leaves the model domain");
    }
  }
  return g;
}

}  // namespace

CausalVerdict function_causal_on_grid(const CliffordModule& cliff,
                                      const SpacetimeModel& model,
                                      const SampledFunction& f, CheckRoute route,
                                      CheckPredicate predicate, double tol) {
  if (f.grid.empty())
    throw std::invalid_argument("function_causal_on_grid: empty grid");
  constexpr double kFdStep = 1e-5;
  constexpr double kFdTol = 1e-5;

  CausalVerdict agg;
  agg.route = route;
  agg.causal = true;
  agg.steep = true;
  agg.margin = -std::numeric_limits<double>::infinity();

  for (const Vector& x : f.grid) {
    const Vector df = f.gradient(x);
    const Vector fd = finite_difference_gradient(model, f, x, kFdStep);
    for (int i = 0; i < df.size(); ++i) {
      if (std::abs(df[i] - fd[i]) > kFdTol * (1.0 + std::abs(df[i]))) {
        std::ostringstream os;
        os << "declared gradient inconsistent with value at grid point (axis " << i
           << ": declared " << df[i] << ", finite difference " << fd[i] << ")";
        throw std::invalid_argument(os.str());
      }
    }

    const CovectorSample sample{x, df};
    CausalVerdict causal_v, steep_v;
    if (route == CheckRoute::Gradient) {
      causal_v = gradient_causal_check(model, sample, tol);
      steep_v = gradient_steep_check(model, sample, tol);
    } else {
      causal_v = operator_causal_check(cliff, model, sample, tol);
      steep_v = operator_steep_check(cliff, model, sample, tol);
    }
    agg.causal = agg.causal && causal_v.causal;
    agg.steep = agg.steep && steep_v.steep;
    const double margin =
        predicate == CheckPredicate::Causal ? causal_v.margin : steep_v.margin;
    agg.margin = std::max(agg.margin, margin);
  }
  return agg;
}

}  // namespace lodist
