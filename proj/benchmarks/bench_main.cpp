#include <benchmark/benchmark.h>

#include <random>

#include "zhdd/random_sqmdd.hpp"
#include "zhdd/semantics.hpp"
#include "zhdd/translator.hpp"

using namespace zhdd;

namespace {

DenseVector random_vector(std::size_t qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseVector v(std::size_t{1} << qubits);
  for (auto& x : v) x = random_weight(rng);
  return v;
}

void BM_CanonicalFromVector(benchmark::State& state) {
  const DenseVector v = random_vector(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_from_vector(v));
  state.SetComplexityN(static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_CanonicalFromVector)->DenseRange(6, 14, 2)->Complexity();

void BM_ReduceNaiveTree(benchmark::State& state) {
  const Sqmdd tree = naive_tree(random_vector(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(tree));
}
BENCHMARK(BM_ReduceNaiveTree)->DenseRange(4, 10, 2);

void BM_SqmddToZhInterpret(benchmark::State& state) {
  const Sqmdd d = canonical_from_vector(random_vector(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(interpret_zh(sqmdd_to_zh(d)));
}
BENCHMARK(BM_SqmddToZhInterpret)->DenseRange(2, 4, 1);

void BM_ZhToSqmdd(benchmark::State& state) {
  std::mt19937_64 rng(4);
  RandomTermOptions opts;
  opts.max_generators = static_cast<std::size_t>(state.range(0));
  std::vector<ZhTerm> terms;
  for (int i = 0; i < 32; ++i) terms.push_back(random_zh_term(rng, opts));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(zh_to_sqmdd(terms[k++ % terms.size()]));
}
BENCHMARK(BM_ZhToSqmdd)->Arg(4)->Arg(12)->Arg(24);

void BM_ZMergeAndPlug(benchmark::State& state) {
  const std::size_t h = static_cast<std::size_t>(state.range(0));
  const Sqmdd d = canonical_from_vector(random_vector(h, 5));
  for (auto _ : state) benchmark::DoNotOptimize(plug_bra_plus(z_merge_outputs(d, 0, h - 1), 0));
}
BENCHMARK(BM_ZMergeAndPlug)->DenseRange(4, 12, 4);

void BM_Tensor(benchmark::State& state) {
  const std::size_t h = static_cast<std::size_t>(state.range(0));
  const Sqmdd a = canonical_from_vector(random_vector(h, 6));
  const Sqmdd b = canonical_from_vector(random_vector(h, 7));
  for (auto _ : state) benchmark::DoNotOptimize(tensor(a, b));
}
BENCHMARK(BM_Tensor)->DenseRange(2, 8, 3);

}  // namespace

BENCHMARK_MAIN();
