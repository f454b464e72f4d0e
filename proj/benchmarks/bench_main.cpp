#include <benchmark/benchmark.h>

#include "mipoly/base_family.hpp"
#include "mipoly/casoratian.hpp"
#include "mipoly/limits.hpp"
#include "mipoly/multi_indexed.hpp"

using namespace mipoly;

namespace {

FamilyParams family_for(int index) {
  switch (index) {
    case 0:
      return make_meixner(Rational(1), Rational(1, 2));
    case 1:
      return make_little_q_jacobi(Rational(1, 32), Rational(1, 3), Rational(1, 2));
    default:
      return make_little_q_laguerre(Rational(1, 32), Rational(1, 2));
  }
}

std::vector<long> labels_of_size(long m) {
  std::vector<long> out;
  for (long j = 1; j <= m; ++j) out.push_back(j);
  return out;
}

void BM_DifferenceEquation(benchmark::State& state) {
  const auto p = family_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_difference_equation(p, 8, 30).passed);
}
BENCHMARK(BM_DifferenceEquation)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Casoratian(benchmark::State& state) {
  const long n = state.range(0);
  std::vector<GridFunction<Rational>> fs;
  for (long j = 0; j < n; ++j) {
    fs.push_back([j](long x) { return pow(Rational(x + 2), j + 1) + Rational(j, 3); });
  }
  for (auto _ : state) benchmark::DoNotOptimize(casoratian(fs, 3));
}
BENCHMARK(BM_Casoratian)->DenseRange(2, 8, 2);

void BM_MultiIndexedSystem(benchmark::State& state) {
  const auto p = family_for(static_cast<int>(state.range(0)));
  const auto d = make_deletion_set(p, labels_of_size(state.range(1)));
  for (auto _ : state) {
    const MultiIndexedSystem sys(p, d, 4);
    benchmark::DoNotOptimize(sys.poly(4).degree());
  }
}
BENCHMARK(BM_MultiIndexedSystem)->ArgsProduct({{0, 1, 2}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_Orthogonality(benchmark::State& state) {
  const auto p = family_for(static_cast<int>(state.range(0)));
  const MultiIndexedSystem sys(p, make_deletion_set(p, {1, 2}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_sum(sys, 2, 3).passed);
}
BENCHMARK(BM_Orthogonality)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ChainVerify(benchmark::State& state) {
  const auto p = family_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chain_verify(p, {1, 2}, 3, 10).passed);
}
BENCHMARK(BM_ChainVerify)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_MeixnerLimitExact(benchmark::State& state) {
  const auto labels = labels_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(meixner_limit_exact(Rational(1, 2), labels, 2).degree());
}
BENCHMARK(BM_MeixnerLimitExact)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_QLimitNumeric(benchmark::State& state) {
  const QLimitConfig config{Family::little_q_jacobi, Rational(1, 2), Rational(1, 3), LimitSubject::polynomial, state.range(0), {}};
  for (auto _ : state) benchmark::DoNotOptimize(q_limit_numeric(config).passed);
}
BENCHMARK(BM_QLimitNumeric)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NormalisationCertified(benchmark::State& state) {
  const auto p = family_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dn_sq(p, 3).value);
}
BENCHMARK(BM_NormalisationCertified)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
