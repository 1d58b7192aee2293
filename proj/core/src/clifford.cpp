#include "lodist/clifford.hpp"

#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace lodist {

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix sigma1() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

ComplexMatrix sigma2() {
  ComplexMatrix s(2, 2);
  s << 0, -kI, kI, 0;
  return s;
}

Vector lorentz_eta(int n) {
  Vector eta = Vector::Ones(n);
  eta[0] = -1.0;
  return eta;
}

/// Exact i^k (std::pow on complex goes through exp/log and is inexact).
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// chi = chi_sign * i^{n/2+1} * gamma^0 ... gamma^{n-1}.
ComplexMatrix chirality(const std::vector<ComplexMatrix>& gammas, int chi_sign) {
  const int n = static_cast<int>(gammas.size());
  ComplexMatrix prod = gammas[0];
  for (int a = 1; a < n; ++a) prod = prod * gammas[a];
  return static_cast<double>(chi_sign) * i_power(n / 2 + 1) * prod;
}

CliffordModule assemble(int n, std::vector<ComplexMatrix> gammas, int chi_sign) {
  CliffordModule m;
  m.n = n;
  m.fiber_dim = static_cast<int>(gammas[0].rows());
  m.gammas = std::move(gammas);
  m.eta = lorentz_eta(n);
  m.J = kI * m.gammas[0];
  m.chi_sign = chi_sign;
  if (n % 2 == 0) m.chi = chirality(m.gammas, chi_sign);
  return m;
}

}  // namespace

namespace {

/// The ladder itself always uses the '+' chirality convention so the gamma
/// matrices do not depend on the caller's sign choice.
CliffordModule build_ladder(int n) {
  if (n == 2) {
    // Base: gamma^0 = i sigma^2 (anti-Hermitian, squares to -1),
    // gamma^1 = sigma^1 (Hermitian, squares to +1).
    std::vector<ComplexMatrix> gammas{kI * sigma2(), sigma1()};
    return assemble(2, std::move(gammas), +1);
  }
  if (n % 2 == 1) {
    // Same fiber as n-1, with the sub-algebra's chirality as the extra
    // Hermitian generator.
    return extend_even(build_ladder(n - 1), +1);
  }
  return extend_odd(build_ladder(n - 1));
}

}  // namespace

CliffordModule build_gamma_matrices(int n, int chi_sign) {
  if (n < 2) throw std::invalid_argument("clifford: dimension must be >= 2");
  if (chi_sign != 1 && chi_sign != -1)
    throw std::invalid_argument("clifford: chi_sign must be +1 or -1");

  CliffordModule m = build_ladder(n);
  m.chi_sign = chi_sign;
  if (m.chi && chi_sign == -1) *m.chi = -(*m.chi);
  return m;
}

CliffordModule extend_even(const CliffordModule& m, int sign) {
  if (m.n % 2 != 0)
    throw std::invalid_argument("extend_even: module dimension must be even");
  if (!m.chi) throw std::invalid_argument("extend_even: module has no chirality");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("extend_even: sign must be +1 or -1");

  CliffordModule out;
  out.n = m.n + 1;
  out.fiber_dim = m.fiber_dim;
  out.gammas = m.gammas;
  out.gammas.push_back(static_cast<double>(sign) * (*m.chi));
  out.eta = lorentz_eta(out.n);
  out.J = m.J;
  out.chi.reset();
  out.chi_sign = m.chi_sign;
  return out;
}

CliffordModule extend_odd(const CliffordModule& m) {
  if (m.n % 2 != 1)
    throw std::invalid_argument("extend_odd: module dimension must be odd");

  const ComplexMatrix s1 = sigma1();
  const ComplexMatrix s2 = sigma2();
  std::vector<ComplexMatrix> gammas;
  gammas.reserve(m.n + 1);
  for (const auto& g : m.gammas)
    gammas.push_back(Eigen::kroneckerProduct(g, s1).eval());
  gammas.push_back(
      Eigen::kroneckerProduct(ComplexMatrix::Identity(m.fiber_dim, m.fiber_dim), s2).eval());
  return assemble(m.n + 1, std::move(gammas), m.chi_sign);
}

ComplexMatrix clifford_action(const CliffordModule& m, const FrameAtPoint& frame,
                              const Vector& df) {
  if (frame.e.rows() != m.n || frame.e.cols() != m.n || df.size() != m.n)
    throw std::invalid_argument("clifford_action: frame/covector dimension mismatch");
  // y_a = e^mu_a f_{,mu}; J[D,f] = gamma^0 gamma^a y_a.
  const Vector y = frame.e.transpose() * df;
  ComplexMatrix sum = ComplexMatrix::Zero(m.fiber_dim, m.fiber_dim);
  for (int a = 0; a < m.n; ++a) sum += y[a] * m.gammas[a];
  return m.gammas[0] * sum;
}

std::vector<IdentityCheck> CliffordReport::violations() const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks)
    if (c.deviation > tol) out.push_back(c);
  return out;
}

std::string CliffordReport::summary() const {
  std::ostringstream os;
  os << (passed ? "pass" : "FAIL") << ": " << checks.size()
     << " identities, max deviation " << max_deviation << " (tol " << tol << ")";
  for (const auto& v : violations()) os << "\n  violated: " << v.label << " dev=" << v.deviation;
  return os.str();
}

namespace {

double max_abs(const ComplexMatrix& a) { return a.cwiseAbs().maxCoeff(); }

void push(CliffordReport& r, std::string label, double dev) {
  r.checks.push_back({std::move(label), dev});
  if (dev > r.max_deviation) r.max_deviation = dev;
}

}  // namespace

CliffordReport verify_clifford(const CliffordModule& m, double tol) {
  CliffordReport r;
  r.tol = tol;
  const int d = m.fiber_dim;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  for (int a = 0; a < m.n; ++a) {
    for (int b = 0; b < m.n; ++b) {
      const ComplexMatrix anti = m.gammas[a] * m.gammas[b] + m.gammas[b] * m.gammas[a];
      const double target = (a == b) ? 2.0 * m.eta[a] : 0.0;
      std::ostringstream label;
      label << "{gamma^" << a << ",gamma^" << b << "} = 2 eta^{" << a << b << "}";
      push(r, label.str(), max_abs(anti - target * id));
    }
  }
  push(r, "gamma^0 anti-Hermitian", max_abs(m.gammas[0] + m.gammas[0].adjoint()));
  for (int a = 1; a < m.n; ++a)
    push(r, "gamma^" + std::to_string(a) + " Hermitian",
         max_abs(m.gammas[a] - m.gammas[a].adjoint()));

  push(r, "J = i gamma^0", max_abs(m.J - kI * m.gammas[0]));
  push(r, "J Hermitian", max_abs(m.J - m.J.adjoint()));
  push(r, "J^2 = 1", max_abs(m.J * m.J - id));

  if (m.n % 2 == 0) {
    if (!m.chi) {
      push(r, "chi present for even n", 1.0);
    } else {
      const ComplexMatrix& chi = *m.chi;
      push(r, "chi Hermitian", max_abs(chi - chi.adjoint()));
      push(r, "chi^2 = 1", max_abs(chi * chi - id));
      for (int a = 0; a < m.n; ++a)
        push(r, "{chi,gamma^" + std::to_string(a) + "} = 0",
             max_abs(chi * m.gammas[a] + m.gammas[a] * chi));
      push(r, "chi J = -J chi", max_abs(chi * m.J + m.J * chi));
    }
  } else if (m.chi) {
    push(r, "chi absent for odd n", 1.0);
  }

  r.passed = r.max_deviation <= tol;
  return r;
}

}  // namespace lodist
