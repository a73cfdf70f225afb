#include <benchmark/benchmark.h>

#include "hwc/builders.hpp"
#include "hwc/cover.hpp"
#include "hwc/matrices.hpp"

using namespace hwc;

namespace {

Workspace make(const std::string& fam, const Field& f) {
  auto B = build_family(fam, f);
  return Workspace(B.A, B.tri);
}

void BM_Truncation(benchmark::State& st) {
  Workspace W = make("trunc:x:-1:3,y:1:3", Field::rationals());
  int d = static_cast<int>(st.range(0));
  for (auto _ : st) {
    Truncation T(W, d);
    benchmark::DoNotOptimize(T.C.dim());
  }
}
BENCHMARK(BM_Truncation)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& st) {
  Workspace W = make("trunc:x:-1:3,y:1:3", Field::rationals());
  Truncation T(W, 3);
  for (auto _ : st) {
    for (int v = 0; v < T.C.nvert(); ++v) benchmark::DoNotOptimize(minimal_resolution(T.C, T.simple(v), 6).length());
  }
}
BENCHMARK(BM_Resolution)->Unit(benchmark::kMillisecond);

void BM_Workspace(benchmark::State& st) {
  for (auto _ : st) {
    Workspace W = make("sl2:" + std::to_string(st.range(0)), Field::prime(st.range(0)));
    benchmark::DoNotOptimize(W.nblocks());
  }
}
BENCHMARK(BM_Workspace)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RationalRank(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(1);
  Field f = Field::rationals();
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f.random(rng, 50);
  for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
