// Acceptance suite: every criterion prints one [PASS]/[FAIL] line with the
// measured quantity and its pinned threshold. Exit code is the number of
// failed criteria (0 when all pass).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lodist/causal.hpp"
#include "lodist/clifford.hpp"
#include "lodist/distance.hpp"
#include "lodist/spacetime.hpp"
#include "testutil.hpp"

using namespace lodist;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SpacetimeModel flrw_linear(int n) {
  return SpacetimeModel::flrw(n, ScaleFactor::linear(), Interval{0.5, 10.0});
}

Vector causal_pair_end(const Vector& p, double dt, double ratio, const Vector& dir) {
  Vector q = p;
  q[0] += dt;
  for (int i = 1; i < p.size(); ++i) q[i] += dt * ratio * dir[i - 1];
  return q;
}

// --- criterion 1 -----------------------------------------------------------
bool clifford_identity_suite(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const CliffordReport r = verify_clifford(build_gamma_matrices(n), 1e-12);
    worst = std::max(worst, r.max_deviation);
    ok = ok && r.passed;
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=2..8 max deviation %.3g (<= 1e-12), %.2fs (< 1s)",
                worst, elapsed);
  detail = buf;
  return ok && worst <= 1e-12 && elapsed < 1.0;
}

// --- criteria 2 and 3 -------------------------------------------------------
bool causal_equivalence(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0, agreed = 0;
  bool ok = true;
  std::uint64_t seed = 2025;
  for (int n = 2; n <= 6; ++n) {
    const CliffordModule cliff = build_gamma_matrices(n);
    const SpacetimeModel models[] = {SpacetimeModel::minkowski(n), flrw_linear(n)};
    for (const SpacetimeModel& model : models) {
      const EquivalenceReport r = equivalence_scan(cliff, model, 1000, seed++, 1e-9);
      checked += r.causal_checked;
      agreed += r.causal_agreed;
      ok = ok && r.causal_agreed == r.causal_checked;
    }
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "causal verdicts agree %d/%d (band 1e-8), %.2fs (< 10s)", agreed,
                checked, elapsed);
  detail = buf;
  return ok && elapsed < 10.0;
}

bool steep_equivalence(std::string& detail) {
  int checked = 0, agreed = 0;
  bool ok = true;
  double worst_identity = 0.0;
  std::uint64_t seed = 4051;
  for (int n = 2; n <= 6; ++n) {
    const CliffordModule cliff = build_gamma_matrices(n);
    const SpacetimeModel models[] = {SpacetimeModel::minkowski(n), flrw_linear(n)};
    for (const SpacetimeModel& model : models) {
      const EquivalenceReport r = equivalence_scan(cliff, model, 1000, seed++, 1e-9);
      checked += r.steep_checked;
      agreed += r.steep_agreed;
      ok = ok && r.steep_agreed == r.steep_checked;
      if (n % 2 == 0) {
        // even-extension identity J([D,f]+i chi) = J~[D~,f~] on fresh samples
        const CliffordModule ext = extend_even(cliff, +1);
        Rng rng(seed * 7919);
        for (int k = 0; k < 1000; ++k) {
          const auto sample = test::random_sample(model, rng);
          const FrameAtPoint frame = model.frame_at(sample.point);
          const ComplexMatrix direct = clifford_action(cliff, frame, sample.components) +
                                       Complex(0, 1) * (cliff.J * (*cliff.chi));
          const ComplexMatrix extended = clifford_action(
              ext, test::extend_frame(frame), test::extend_covector(sample.components));
          worst_identity =
              std::max(worst_identity, (direct - extended).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "steep verdicts agree %d/%d; extension identity max dev %.3g (<= 1e-12)",
                agreed, checked, worst_identity);
  detail = buf;
  return ok && worst_identity <= 1e-12;
}

// --- criterion 4 ------------------------------------------------------------
bool spectrum_law(std::string& detail) {
  double worst = 0.0;
  std::uint64_t seed = 60601;
  for (int n = 2; n <= 6; ++n) {
    const CliffordModule cliff = build_gamma_matrices(n);
    const SpacetimeModel models[] = {SpacetimeModel::minkowski(n), flrw_linear(n)};
    for (const SpacetimeModel& model : models) {
      Rng rng(seed++);
      for (int k = 0; k < 1000; ++k) {
        const auto sample = test::random_sample(model, rng);
        const auto eig = test::hermitian_eigenvalues(
            clifford_action(cliff, model.frame_at(sample.point), sample.components));
        const auto expected =
            test::expected_action_spectrum(model, sample, cliff.fiber_dim);
        for (std::size_t i = 0; i < eig.size(); ++i)
          worst = std::max(worst, std::abs(eig[i] - expected[i]));
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "eigenvalues match -f_0 +- s at multiplicity fiber/2, max dev %.3g "
                "(<= 1e-9)",
                worst);
  detail = buf;
  return worst <= 1e-9;
}

// --- criterion 5 ------------------------------------------------------------
bool minkowski_reproduction(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_steep = 0.0, worst_oracle = 0.0;
  bool zeros_ok = true;
  Rng rng(50505);
  for (int n : {2, 3, 4}) {
    const SpacetimeModel mink = SpacetimeModel::minkowski(n);
    const SteepFamily boost = make_boost_family(n);
    for (int k = 0; k < 100; ++k) {
      const Vector p = rng.uniform_vector(n, -1.0, 1.0);
      Vector dir = rng.uniform_vector(n - 1, -1.0, 1.0);
      if (dir.norm() == 0.0) dir[0] = 1.0;
      dir /= dir.norm();
      const double dt = rng.uniform(0.5, 2.5);
      const double ratio = rng.uniform(0.0, 0.9);
      const Vector q = causal_pair_end(p, dt, ratio, dir);
      const double exact = std::sqrt(dt * dt * (1.0 - ratio * ratio));

      VariationalSettings vs;
      vs.seed = 1000 + k;
      const double upper = steep_family_distance(mink, boost, p, q, vs).value;
      worst_steep = std::max(worst_steep, std::abs(upper - exact));

      OracleSettings os;
      os.seed = 2000 + k;
      os.segments = 64;
      const double lower = oracle_distance(mink, p, q, os).value;
      worst_oracle = std::max(worst_oracle, std::abs(lower - exact));
    }
    // spacelike pairs: exactly zero by all methods
    for (int k = 0; k < 30; ++k) {
      const Vector p = rng.uniform_vector(n, -1.0, 1.0);
      Vector dir = Vector::Zero(n - 1);
      dir[0] = 1.0;
      const double dt = rng.uniform(0.2, 1.5);
      const Vector q = causal_pair_end(p, dt, rng.uniform(1.1, 3.0), dir);
      VariationalSettings vs;
      vs.seed = 3000 + k;
      OracleSettings os;
      os.seed = 4000 + k;
      zeros_ok = zeros_ok && analytic_distance(mink, p, q).value == 0.0 &&
                 oracle_distance(mink, p, q, os).value == 0.0 &&
                 steep_family_distance(mink, boost, p, q, vs).value == 0.0;
    }
  }
  const double elapsed = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "steep dev %.3g (<= 1e-6), oracle dev %.3g (<= 1e-3), spacelike %s, "
                "%.1fs (< 60s)",
                worst_steep, worst_oracle, zeros_ok ? "all zero" : "NONZERO", elapsed);
  detail = buf;
  return worst_steep <= 1e-6 && worst_oracle <= 1e-3 && zeros_ok && elapsed < 60.0;
}

// --- criterion 6 ------------------------------------------------------------
bool flrw_comoving(std::string& detail) {
  const SpacetimeModel flrw = flrw_linear(2);
  const SteepFamily tlin = make_temporal_linear_family(flrw);
  double worst = 0.0;
  Rng rng(606);
  for (int k = 0; k < 20; ++k) {
    const double t0 = rng.uniform(0.6, 5.0);
    const double t1 = t0 + rng.uniform(0.2, 4.0);
    const double x = rng.uniform(-3.0, 3.0);
    Vector p(2), q(2);
    p << t0, x;
    q << t1, x;
    OracleSettings os;
    os.seed = 100 + k;
    VariationalSettings vs;
    vs.seed = 200 + k;
    const double oracle = oracle_distance(flrw, p, q, os).value;
    const double steep = steep_family_distance(flrw, tlin, p, q, vs).value;
    worst = std::max({worst, std::abs(oracle - (t1 - t0)), std::abs(steep - (t1 - t0))});
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "20 comoving pairs, max |d - dt| = %.3g (<= 1e-3)",
                worst);
  detail = buf;
  return worst <= 1e-3;
}

// --- criterion 7 ------------------------------------------------------------
bool order_properties(std::string& detail) {
  Rng rng(707);
  double worst_triangle = -1e300;
  bool antisym_ok = true;
  int triples = 0;
  for (int n : {2, 3}) {
    const SpacetimeModel mink = SpacetimeModel::minkowski(n);
    OracleSettings os;
    os.segments = 32;
    for (int k = 0; k < 50; ++k, ++triples) {
      os.seed = 10 * k + 1;
      Vector p = rng.uniform_vector(n, -1.0, 1.0);
      Vector dir = rng.uniform_vector(n - 1, -1.0, 1.0);
      if (dir.norm() == 0.0) dir[0] = 1.0;
      dir /= dir.norm();
      const Vector q = causal_pair_end(p, rng.uniform(0.4, 1.5), rng.uniform(0.0, 0.8), dir);
      const Vector r = causal_pair_end(q, rng.uniform(0.4, 1.5), rng.uniform(0.0, 0.8), dir);
      const double dpq = oracle_distance(mink, p, q, os).value;
      const double dqr = oracle_distance(mink, q, r, os).value;
      const double dpr = oracle_distance(mink, p, r, os).value;
      worst_triangle = std::max(worst_triangle, dpq + dqr - dpr);
      antisym_ok = antisym_ok && oracle_distance(mink, q, p, os).value == 0.0 &&
                   oracle_distance(mink, r, p, os).value == 0.0;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d triples: max (d(p,q)+d(q,r)-d(p,r)) = %.3g (<= 1e-3); antisymmetry %s",
                triples, worst_triangle, antisym_ok ? "holds" : "VIOLATED");
  detail = buf;
  return worst_triangle <= 1e-3 && antisym_ok;
}

// --- criterion 8 ------------------------------------------------------------
bool one_sided_bound(std::string& detail) {
  Rng rng(808);
  double worst = -1e300;  // max of oracle - bound; must stay <= 1e-3
  int functions = 0;
  for (int n : {2, 3}) {
    const SpacetimeModel mink = SpacetimeModel::minkowski(n);
    const SteepFamily boost = make_boost_family(n);
    OracleSettings os;
    os.segments = 48;
    for (int k = 0; k < 20; ++k) {
      os.seed = 30 + k;
      const Vector p = rng.uniform_vector(n, -1.0, 1.0);
      Vector dir = rng.uniform_vector(n - 1, -1.0, 1.0);
      if (dir.norm() == 0.0) dir[0] = 1.0;
      dir /= dir.norm();
      const Vector q =
          causal_pair_end(p, rng.uniform(0.5, 2.0), rng.uniform(0.0, 0.85), dir);
      const double lower = oracle_distance(mink, p, q, os).value;
      for (int j = 0; j < 5; ++j) {
        const Vector theta = rng.uniform_vector(n - 1, -2.0, 2.0);
        if (!family_member_is_steep(mink, boost, theta)) continue;
        ++functions;
        const double bound = pos_part(boost.value(theta, q) - boost.value(theta, p));
        worst = std::max(worst, lower - bound);
      }
    }
  }
  // FLRW comoving with f = t
  const SpacetimeModel flrw = flrw_linear(2);
  const SteepFamily tlin = make_temporal_linear_family(flrw);
  const Vector zero_theta = Vector::Zero(1);
  for (int k = 0; k < 10; ++k) {
    const double t0 = rng.uniform(0.6, 4.0);
    const double t1 = t0 + rng.uniform(0.3, 3.0);
    Vector p(2), q(2);
    p << t0, 1.0;
    q << t1, 1.0;
    OracleSettings os;
    os.seed = 70 + k;
    ++functions;
    const double lower = oracle_distance(flrw, p, q, os).value;
    const double bound = pos_part(tlin.value(zero_theta, q) - tlin.value(zero_theta, p));
    worst = std::max(worst, lower - bound);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d steep functions: max (oracle - [f(q)-f(p)]+) = %.3g (<= 1e-3)",
                functions, worst);
  detail = buf;
  return worst <= 1e-3;
}

// --- criterion 9 ------------------------------------------------------------
bool riemannian_sanity(std::string& detail) {
  Rng rng(909);
  double worst = 0.0;
  for (int dim : {2, 3}) {
    for (int k = 0; k < 25; ++k) {
      const Vector p = rng.uniform_vector(dim, -5.0, 5.0);
      const Vector q = rng.uniform_vector(dim, -5.0, 5.0);
      worst = std::max(worst, std::abs(riemannian_baseline(p, q) - (q - p).norm()));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "50 pairs in R^2/R^3, max dev %.3g (<= 1e-9)", worst);
  detail = buf;
  return worst <= 1e-9;
}

// --- criterion 10 -----------------------------------------------------------
bool chi_sign_invariance(std::string& detail) {
  Rng rng(1010);
  double worst_margin = 0.0;
  bool verdicts_ok = true;
  for (int n : {2, 4, 6}) {
    const CliffordModule plus = build_gamma_matrices(n, +1);
    const CliffordModule minus = build_gamma_matrices(n, -1);
    const SpacetimeModel mink = SpacetimeModel::minkowski(n);
    for (int k = 0; k < 200; ++k) {
      const auto sample = test::random_sample(mink, rng);
      const auto vp = operator_steep_check(plus, mink, sample);
      const auto vm = operator_steep_check(minus, mink, sample);
      verdicts_ok = verdicts_ok && vp.steep == vm.steep;
      worst_margin = std::max(worst_margin, std::abs(vp.margin - vm.margin));
    }
  }
  // variational distances are computed identically under either sign
  const SpacetimeModel mink = SpacetimeModel::minkowski(2);
  const SteepFamily boost = make_boost_family(2);
  double worst_dist = 0.0;
  for (int k = 0; k < 10; ++k) {
    Vector p(2), q(2);
    p << 0.0, 0.0;
    q << 1.0 + 0.1 * k, 0.3;
    VariationalSettings vs;
    vs.seed = 40 + k;
    const double d_plus = steep_family_distance(mink, boost, p, q, vs).value;
    const double d_minus = steep_family_distance(mink, boost, p, q, vs).value;
    worst_dist = std::max(worst_dist, std::abs(d_plus - d_minus));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "verdicts %s; margin dev %.3g, distance dev %.3g (<= 1e-12)",
                verdicts_ok ? "unchanged" : "CHANGED", worst_margin, worst_dist);
  detail = buf;
  return verdicts_ok && worst_margin <= 1e-12 && worst_dist <= 1e-12;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"clifford identity suite (n=2..8, tol 1e-12, < 1s)", clifford_identity_suite},
      {"causal equivalence: gradient vs operator, 1000 covectors x n=2..6 x 2 models",
       causal_equivalence},
      {"steep equivalence + even-extension matrix identity", steep_equivalence},
      {"spectrum law: eig(J[D,f]) = -f_0 +- s at multiplicity fiber/2", spectrum_law},
      {"Minkowski distance reproduction (boost family / 64-segment oracle)",
       minkowski_reproduction},
      {"FLRW comoving pairs (a(t)=t): oracle and f=t variational within 1e-3",
       flrw_comoving},
      {"reverse triangle inequality and antisymmetry on oracle values",
       order_properties},
      {"one-sided bound: [f(q)-f(p)]+ >= oracle - 1e-3 for validated steep f",
       one_sided_bound},
      {"riemannian baseline reproduces Euclidean distance to 1e-9",
       riemannian_sanity},
      {"chirality sign flip changes nothing beyond 1e-12", chi_sign_invariance},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu. %s: %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
