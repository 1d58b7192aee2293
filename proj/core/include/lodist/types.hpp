#ifndef LODIST_TYPES_HPP
#define LODIST_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace lodist {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Default tolerance for the semi-definiteness / causality verdicts.
inline constexpr double kDefaultTol = 1e-9;

/// Seeded uniform generator. The mapping from engine output to doubles is
/// pinned here (53-bit mantissa fill) so that identical seeds give identical
/// streams on every platform, independent of the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Vector uniform_vector(int dim, double lo, double hi) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lodist

#endif
