#include <benchmark/benchmark.h>

#include <random>

#include "symfuse/symfuse.hpp"

using namespace symfuse;

namespace {

GroupAlgebraElement random_element(std::mt19937_64& rng, std::size_t n, std::size_t terms) {
  const std::uint64_t order = factorial(n);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    const long num = static_cast<long>(rng() % 19) - 9;
    ts.push_back({Permutation::unrank(rng() % order, n), make_rational(num, 1 + static_cast<long>(rng() % 5))});
  }
  return GroupAlgebraElement::from_terms(n, std::move(ts));
}

// A tableau of each size whose shape is as close to square as possible.
StandardTableau squarish(int n) {
  const auto shapes = partitions_of(n);
  const Partition* best = &shapes.front();
  for (const auto& p : shapes)
    if (std::max(p.row(1), p.length()) < std::max(best->row(1), best->length())) best = &p;
  return standard_tableaux(*best).front();
}

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto terms = static_cast<std::size_t>(state.range(1));
  const auto a = random_element(rng, n, terms);
  const auto b = random_element(rng, n, terms);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel(std::to_string(a.size()) + "x" + std::to_string(b.size()) + " terms");
}
BENCHMARK(BM_Multiply)->Args({5, 30})->Args({6, 100})->Args({7, 200})->Args({8, 2})->Unit(benchmark::kMicrosecond);

void BM_MurphyUnit(benchmark::State& state) {
  const auto t = squarish(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_unit_murphy(t));
  state.SetLabel(t.to_string());
}
BENCHMARK(BM_MurphyUnit)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_EvaluateFusion(benchmark::State& state) {
  const auto t = squarish(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_fusion(t));
  state.SetLabel(t.to_string());
}
BENCHMARK(BM_EvaluateFusion)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_AllMatrixUnits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_matrix_units(n));
}
BENCHMARK(BM_AllMatrixUnits)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SchurWeylRank(benchmark::State& state) {
  const auto t = squarish(static_cast<int>(state.range(0)));
  const auto dim = static_cast<std::size_t>(state.range(1));
  const auto e = matrix_unit_murphy(t);
  for (auto _ : state) benchmark::DoNotOptimize(rank(schur_weyl_image(e, dim).matrix()));
  state.SetLabel(t.to_string());
}
BENCHMARK(BM_SchurWeylRank)->Args({3, 3})->Args({4, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_YangBaxterCheck(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ybe_check(make_rational(3, 2), make_rational(-5, 7), dim));
}
BENCHMARK(BM_YangBaxterCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
