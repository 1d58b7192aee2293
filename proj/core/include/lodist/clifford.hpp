#ifndef LODIST_CLIFFORD_HPP
#define LODIST_CLIFFORD_HPP

#include <optional>
#include <string>
#include <vector>

#include "lodist/spacetime.hpp"
#include "lodist/types.hpp"

namespace lodist {

/// Finite-dimensional Clifford module for signature (-,+,...,+):
/// n gamma matrices over a spinor fiber of dimension 2^floor(n/2) with
/// {gamma^a, gamma^b} = 2 eta^{ab}, gamma^0 anti-Hermitian, the rest
/// Hermitian, fundamental symmetry J = i gamma^0, and for even n the
/// chirality chi = chi_sign * i^{n/2+1} gamma^0 ... gamma^{n-1}.
struct CliffordModule {
  int n = 0;
  int fiber_dim = 0;
  std::vector<ComplexMatrix> gammas;
  Vector eta;  // diagonal entries (-1, +1, ..., +1)
  ComplexMatrix J;
  std::optional<ComplexMatrix> chi;  // present iff n is even
  int chi_sign = +1;
};

/// Builds the module for dimension n >= 2 by the recursive tensor ladder:
/// the 2x2 base {i sigma^2, sigma^1}, odd dimensions reuse the even (n-1)
/// fiber with the sub-algebra's chirality as the extra Hermitian generator,
/// and even dimensions n >= 4 double the (n-1) fiber. All entries are exact
/// (0, ±1, ±i or ±1 times those).
CliffordModule build_gamma_matrices(int n, int chi_sign = +1);

/// Adjoins gamma^n = sign * chi to an even-dimensional module, producing an
/// (n+1)-dimensional module over the same fiber (no chirality).
CliffordModule extend_even(const CliffordModule& m, int sign);

/// Doubles the fiber of an odd-dimensional module: gamma~^mu = gamma^mu (x)
/// sigma^1, gamma~^n = 1 (x) sigma^2, J~ = J (x) sigma^1, with the chirality
/// of the new even dimension populated.
CliffordModule extend_odd(const CliffordModule& m);

/// The Hermitian matrix J [D, f] = gamma^0 gamma^a e^mu_a f_{,mu} at the
/// frame's point. Throws on dimension mismatch.
ComplexMatrix clifford_action(const CliffordModule& m, const FrameAtPoint& frame,
                              const Vector& df);

struct IdentityCheck {
  std::string label;
  double deviation = 0.0;
};

struct CliffordReport {
  double tol = 0.0;
  double max_deviation = 0.0;
  bool passed = false;
  std::vector<IdentityCheck> checks;

  std::vector<IdentityCheck> violations() const;
  std::string summary() const;
};

/// Scans every anticommutator identity, the (anti-)Hermiticity of each
/// generator, the J identities, and (when present) the chi identities.
/// Report-only: passes iff the worst deviation is <= tol.
CliffordReport verify_clifford(const CliffordModule& m, double tol = 1e-12);

}  // namespace lodist

#endif
