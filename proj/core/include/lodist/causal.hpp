#ifndef LODIST_CAUSAL_HPP
#define LODIST_CAUSAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lodist/clifford.hpp"
#include "lodist/spacetime.hpp"
#include "lodist/types.hpp"

namespace lodist {

enum class CheckRoute { Gradient, Operator };
enum class CheckPredicate { Causal, Steep };

/// Verdict of a causality / steepness check at one covector sample.
/// margin is the most-violated constraint value of the predicate the check
/// was asked about (<= 0 when satisfied); both flags are always filled and
/// steep implies causal.
struct CausalVerdict {
  bool causal = false;
  bool steep = false;
  double margin = 0.0;
  CheckRoute route = CheckRoute::Gradient;
};

/// Metric-level route: causal iff g^{mu nu} f_{,mu} f_{,nu} <= tol and
/// -f_{,0} <= tol; margin is the larger constraint value.
CausalVerdict gradient_causal_check(const SpacetimeModel& model,
                                    const CovectorSample& sample,
                                    double tol = kDefaultTol);

/// Metric-level steepness: g^{mu nu} f_{,mu} f_{,nu} <= -1 + tol with
/// past-directed gradient.
CausalVerdict gradient_steep_check(const SpacetimeModel& model,
                                   const CovectorSample& sample,
                                   double tol = kDefaultTol);

/// Operator route: causal iff the Hermitian matrix J[D,f] on the spinor
/// fiber is negative semi-definite; margin is its largest eigenvalue.
CausalVerdict operator_causal_check(const CliffordModule& cliff,
                                    const SpacetimeModel& model,
                                    const CovectorSample& sample,
                                    double tol = kDefaultTol);

/// Operator steepness. Even n: NSD of J[D,f] + i J chi. Odd n: NSD of both
/// J[D,f] + J and J[D,f] - J; margin is the largest eigenvalue over the
/// checked matrices.
CausalVerdict operator_steep_check(const CliffordModule& cliff,
                                   const SpacetimeModel& model,
                                   const CovectorSample& sample,
                                   double tol = kDefaultTol);

struct ScanFailure {
  Vector point;
  Vector components;
  double gradient_margin = 0.0;
  double operator_margin = 0.0;
  std::string predicate;  // "causal" or "steep"
};

struct EquivalenceReport {
  int trials = 0;
  int causal_checked = 0;
  int causal_agreed = 0;
  int steep_checked = 0;
  int steep_agreed = 0;
  // max over disagreeing samples of min(|gradient margin|, |operator margin|)
  double max_discrepancy = 0.0;
  std::vector<ScanFailure> failures;  // capped at 10
  bool passed = false;

  std::string summary() const;
};

/// Draws `trials` random covectors (components uniform in [-3,3]) at random
/// domain points and cross-checks the gradient and operator verdicts for
/// both predicates, excluding samples whose margin on either route lies
/// within 10*tol of zero.
EquivalenceReport equivalence_scan(const CliffordModule& cliff,
                                   const SpacetimeModel& model, int trials,
                                   std::uint64_t seed, double tol = kDefaultTol);

/// Rectangular sampling lattice.
struct GridSpec {
  Vector lo;
  Vector hi;
  std::vector<int> counts;  // points per axis, >= 1

  std::vector<Vector> points() const;
};

/// A C^1 test function given by its value and gradient evaluators plus the
/// declared grid on which grid checks run. The gradient is cross-checked
/// against finite differences of the value before verdicts are trusted.
struct SampledFunction {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::vector<Vector> grid;
};

/// Conjunction of per-point verdicts over the declared grid; margin is the
/// worst value of the selected predicate's constraint. Throws if the
/// declared gradient disagrees with finite differences of the value.
CausalVerdict function_causal_on_grid(const CliffordModule& cliff,
                                      const SpacetimeModel& model,
                                      const SampledFunction& f,
                                      CheckRoute route = CheckRoute::Operator,
                                      CheckPredicate predicate = CheckPredicate::Causal,
                                      double tol = kDefaultTol);

}  // namespace lodist

#endif
