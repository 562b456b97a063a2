#include <benchmark/benchmark.h>

#include "hopfforms/theta.hpp"

using namespace hopfforms;

static void BM_CyclotomicMult(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CycElem a = CycElem::zeta(n) + CycElem::rational(Rat(2));
  CycElem b = CycElem::zeta_pow(n, n / 2) - CycElem::rational(Rat(1, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CyclotomicMult)->Arg(8)->Arg(15)->Arg(24);

static void BM_RowEchelonRank(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::vector<SparseVec> rows;
  for (int i = 0; i < dim; ++i) {
    QVec v = qvec_zero(dim);
    for (int j = 0; j < dim; ++j) v[j] = Rat((i * j) % 7 - 3, 1 + (i + j) % 5);
    rows.push_back(SparseVec::from_dense(v));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_of(rows));
  }
}
BENCHMARK(BM_RowEchelonRank)->Arg(16)->Arg(32)->Arg(64);

static void BM_RegularEnumeration(benchmark::State& state) {
  const FiniteGroup g = FiniteGroup::quaternion8();
  EnumerateOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_regular_subgroups(g, opts));
  }
}
BENCHMARK(BM_RegularEnumeration)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FixedRing(benchmark::State& state) {
  const GaloisAlgebra e = biquadratic_sqrt2_sqrt3();
  const auto subs = enumerate_regular_subgroups(e.group);
  for (auto _ : state) {
    for (const auto& s : subs) benchmark::DoNotOptimize(descend(e, s));
  }
}
BENCHMARK(BM_FixedRing)->Unit(benchmark::kMillisecond);

static void BM_WedderburnQ8(benchmark::State& state) {
  const AssocAlgebra a = group_algebra(FiniteGroup::quaternion8()).algebra();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedderburn_decompose(a));
  }
}
BENCHMARK(BM_WedderburnQ8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
