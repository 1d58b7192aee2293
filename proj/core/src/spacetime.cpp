#include "lodist/spacetime.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lodist {

double ScaleFactor::value(double t) const {
  if (power == 0.0) return coeff;
  if (power == 1.0) return coeff * t;
  return coeff * std::pow(t, power);
}

double ScaleFactor::derivative(double t) const {
  if (power == 0.0) return 0.0;
  if (power == 1.0) return coeff;
  return coeff * power * std::pow(t, power - 1.0);
}

namespace {

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

ScaleFactor ScaleFactor::parse(const std::string& expr) {
  const std::string text = strip(expr);
  if (text.empty()) throw std::invalid_argument("scale factor: empty expression");

  double coeff = 1.0;
  std::string rest = text;
  const auto star = text.find('*');
  if (star != std::string::npos) {
    if (!parse_double(strip(text.substr(0, star)), coeff))
      throw std::invalid_argument("scale factor: bad coefficient in '" + expr + "'");
    rest = strip(text.substr(star + 1));
  }

  double power = 0.0;
  if (rest == "t") {
    power = 1.0;
  } else if (rest.rfind("t^", 0) == 0) {
    if (!parse_double(strip(rest.substr(2)), power))
      throw std::invalid_argument("scale factor: bad exponent in '" + expr + "'");
  } else if (star == std::string::npos) {
    // bare constant
    if (!parse_double(rest, coeff))
      throw std::invalid_argument("scale factor: expected c, t, c*t, t^p or c*t^p, got '" +
                                  expr + "'");
    power = 0.0;
  } else {
    throw std::invalid_argument("scale factor: expected t or t^p after '*' in '" + expr + "'");
  }
  if (!(coeff > 0.0))
    throw std::invalid_argument("scale factor: coefficient must be positive in '" + expr + "'");
  return {coeff, power};
}

std::string ScaleFactor::str() const {
  std::ostringstream os;
  if (power == 0.0) {
    os << coeff;
  } else {
    if (coeff != 1.0) os << coeff << "*";
    os << "t";
    if (power != 1.0) os << "^" << power;
  }
  return os.str();
}

SpacetimeModel::SpacetimeModel(ModelKind kind, int n, ScaleFactor a, Interval domain)
    : kind_(kind), n_(n), a_(a), domain_(domain) {}

SpacetimeModel SpacetimeModel::minkowski(int n) {
  if (n < 2) throw std::invalid_argument("spacetime dimension must be >= 2");
  return SpacetimeModel(ModelKind::Minkowski, n, ScaleFactor::constant(1.0), Interval{});
}

SpacetimeModel SpacetimeModel::flrw(int n, ScaleFactor a, Interval t_domain) {
  if (n < 2) throw std::invalid_argument("spacetime dimension must be >= 2");
  if (!(t_domain.lo < t_domain.hi))
    throw std::invalid_argument("flrw: t-domain must be a nonempty interval");
  if (a.power != 0.0 && !(t_domain.lo > 0.0))
    throw std::invalid_argument("flrw: t-domain must be positive for a(t) = c*t^p");
  if (!(a.value(t_domain.lo) > 0.0) || !(a.value(t_domain.hi) > 0.0))
    throw std::invalid_argument("flrw: a(t) must be positive on the declared domain");
  return SpacetimeModel(ModelKind::Flrw, n, a, t_domain);
}

std::string SpacetimeModel::name() const {
  if (kind_ == ModelKind::Minkowski) return "minkowski";
  return "flrw(a=" + a_.str() + ")";
}

bool SpacetimeModel::in_domain(const Vector& x) const {
  if (x.size() != n_) return false;
  if (!x.allFinite()) return false;
  if (kind_ == ModelKind::Flrw) {
    return domain_.contains(x[0]) && a_.value(x[0]) > 0.0;
  }
  return true;
}

void SpacetimeModel::require_in_domain(const Vector& x) const {
  if (x.size() != n_)
    throw std::domain_error("point dimension " + std::to_string(x.size()) +
                            " does not match model dimension " + std::to_string(n_));
  if (!in_domain(x)) {
    std::ostringstream os;
    os << "point outside model domain (t=" << (x.size() > 0 ? x[0] : 0.0) << ")";
    throw std::domain_error(os.str());
  }
}

Matrix SpacetimeModel::metric_at(const Vector& x) const {
  require_in_domain(x);
  Matrix g = Matrix::Identity(n_, n_);
  g(0, 0) = -1.0;
  if (kind_ == ModelKind::Flrw) {
    const double a2 = a_.value(x[0]) * a_.value(x[0]);
    for (int i = 1; i < n_; ++i) g(i, i) = a2;
  }
  return g;
}

Matrix SpacetimeModel::inverse_metric_at(const Vector& x) const {
  require_in_domain(x);
  Matrix gi = Matrix::Identity(n_, n_);
  gi(0, 0) = -1.0;
  if (kind_ == ModelKind::Flrw) {
    const double a = a_.value(x[0]);
    for (int i = 1; i < n_; ++i) gi(i, i) = 1.0 / (a * a);
  }
  return gi;
}

FrameAtPoint SpacetimeModel::frame_at(const Vector& x) const {
  const Matrix g = metric_at(x);
  Matrix e = Matrix::Zero(n_, n_);
  e(0, 0) = 1.0;
  // Spatial block is positive definite; its Cholesky factor L gives
  // e_spatial = L^{-T}, so e^T g e = eta. Diagonal metrics reduce to
  // 1/sqrt(g_ii).
  const Matrix spatial = g.bottomRightCorner(n_ - 1, n_ - 1);
  Eigen::LLT<Matrix> llt(spatial);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("frame_at: spatial metric block not positive definite");
  const Matrix lt = llt.matrixL().transpose();
  e.bottomRightCorner(n_ - 1, n_ - 1) =
      lt.triangularView<Eigen::Upper>().solve(Matrix::Identity(n_ - 1, n_ - 1));
  return FrameAtPoint{x, e};
}

CovectorClass classify_covector(const SpacetimeModel& model, const CovectorSample& sample,
                                double null_band) {
  model.require_in_domain(sample.point);
  if (sample.components.size() != model.dimension())
    throw std::domain_error("covector dimension does not match model");
  if (!sample.components.allFinite())
    throw std::domain_error("covector components must be finite");

  CovectorClass out;
  if (sample.components.isZero(0.0)) {
    out.character = CausalCharacter::Zero;
    out.orientation = TimeOrientation::None;
    out.norm_sq = 0.0;
    return out;
  }

  const Matrix gi = model.inverse_metric_at(sample.point);
  out.norm_sq = sample.components.dot(gi * sample.components);

  if (out.norm_sq > null_band) {
    out.character = CausalCharacter::Spacelike;
    out.orientation = TimeOrientation::None;
    return out;
  }
  out.character = std::abs(out.norm_sq) <= null_band ? CausalCharacter::Null
                                                     : CausalCharacter::Timelike;
  // Time component of the gradient vector: v^0 = g^{00} f_{,0} = -f_{,0}
  // in the normalized gauge. Non-positive means past-directed.
  const double v0 = (gi * sample.components)[0];
  out.orientation = v0 <= 0.0 ? TimeOrientation::PastDirected : TimeOrientation::FutureDirected;
  return out;
}

}  // namespace lodist
