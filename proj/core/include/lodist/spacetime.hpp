#ifndef LODIST_SPACETIME_HPP
#define LODIST_SPACETIME_HPP

#include <string>

#include "lodist/types.hpp"

namespace lodist {

enum class ModelKind { Minkowski, Flrw };

/// Scale factor a(t) = coeff * t^power, the whitelist of safe expressions
/// accepted by the scenario parser (constant, linear, power).
struct ScaleFactor {
  double coeff = 1.0;
  double power = 0.0;

  double value(double t) const;
  double derivative(double t) const;

  /// Accepts "c", "t", "c*t", "t^p", "c*t^p". Throws std::invalid_argument.
  static ScaleFactor parse(const std::string& expr);
  std::string str() const;

  static ScaleFactor constant(double c) { return {c, 0.0}; }
  static ScaleFactor linear(double c = 1.0) { return {c, 1.0}; }
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// Vierbein at a chart point: e(mu, a) maps frame index a to chart index mu,
/// with g_{mu nu} e^mu_a e^nu_b = eta_{ab}. In the normalized temporal gauge
/// e^0_0 = 1 and the mixed time components vanish.
struct FrameAtPoint {
  Vector point;
  Matrix e;
};

/// A point together with the gradient components f_{,mu} of some test
/// function evaluated there.
struct CovectorSample {
  Vector point;
  Vector components;
};

enum class CausalCharacter { Timelike, Null, Spacelike, Zero };
enum class TimeOrientation { FutureDirected, PastDirected, None };

struct CovectorClass {
  CausalCharacter character = CausalCharacter::Zero;
  TimeOrientation orientation = TimeOrientation::None;
  double norm_sq = 0.0;  // g^{mu nu} f_{,mu} f_{,nu}
};

/// Model spacetimes in the normalized temporal gauge (g_00 = -1, g_0i = 0):
/// flat Minkowski space in any dimension, and spatially flat FLRW
/// ds^2 = -dt^2 + a(t)^2 dx^2 on a declared t-interval with a(t) > 0.
class SpacetimeModel {
 public:
  static SpacetimeModel minkowski(int n);
  static SpacetimeModel flrw(int n, ScaleFactor a, Interval t_domain);

  ModelKind kind() const { return kind_; }
  int dimension() const { return n_; }
  const ScaleFactor& scale_factor() const { return a_; }
  Interval time_domain() const { return domain_; }
  std::string name() const;

  bool in_domain(const Vector& x) const;
  void require_in_domain(const Vector& x) const;  // throws std::domain_error

  Matrix metric_at(const Vector& x) const;
  Matrix inverse_metric_at(const Vector& x) const;
  FrameAtPoint frame_at(const Vector& x) const;

 private:
  SpacetimeModel(ModelKind kind, int n, ScaleFactor a, Interval domain);

  ModelKind kind_;
  int n_;
  ScaleFactor a_;
  Interval domain_;
};

/// Causal character of the gradient vector g^{-1} df and its time
/// orientation. |norm_sq| <= null_band reports Null; the exact zero covector
/// reports the distinct Zero character.
CovectorClass classify_covector(const SpacetimeModel& model,
                                const CovectorSample& sample,
                                double null_band = 1e-10);

}  // namespace lodist

#endif
