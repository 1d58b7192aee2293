#include <benchmark/benchmark.h>

#include "lodist/causal.hpp"
#include "lodist/clifford.hpp"
#include "lodist/distance.hpp"
#include "lodist/spacetime.hpp"

using namespace lodist;

static void BuildGammaMatrices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = build_gamma_matrices(n);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BuildGammaMatrices)->DenseRange(2, 8);

static void VerifyClifford(benchmark::State& state) {
  const CliffordModule m = build_gamma_matrices(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = verify_clifford(m, 1e-12);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(VerifyClifford)->Arg(4)->Arg(6)->Arg(8);

static void OperatorCausalCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CliffordModule cliff = build_gamma_matrices(n);
  const SpacetimeModel mink = SpacetimeModel::minkowski(n);
  Rng rng(1);
  const CovectorSample sample{rng.uniform_vector(n, -3, 3), rng.uniform_vector(n, -3, 3)};
  for (auto _ : state) {
    auto v = operator_causal_check(cliff, mink, sample);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(OperatorCausalCheck)->DenseRange(2, 6);

static void EquivalenceScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CliffordModule cliff = build_gamma_matrices(n);
  const SpacetimeModel mink = SpacetimeModel::minkowski(n);
  for (auto _ : state) {
    auto r = equivalence_scan(cliff, mink, 100, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(EquivalenceScan)->Arg(2)->Arg(4)->Arg(6);

static void OracleDistance(benchmark::State& state) {
  const SpacetimeModel mink = SpacetimeModel::minkowski(2);
  Vector p(2), q(2);
  p << 0, 0;
  q << 2, 1;
  OracleSettings settings;
  settings.segments = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = oracle_distance(mink, p, q, settings);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(OracleDistance)->Arg(16)->Arg(64)->Arg(256);

static void SteepFamilyDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpacetimeModel mink = SpacetimeModel::minkowski(n);
  const SteepFamily boost = make_boost_family(n);
  Vector p = Vector::Zero(n);
  Vector q = Vector::Zero(n);
  q[0] = 2.0;
  q[1] = 1.0;
  for (auto _ : state) {
    auto r = steep_family_distance(mink, boost, p, q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SteepFamilyDistance)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
