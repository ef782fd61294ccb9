#include <benchmark/benchmark.h>

#include "theta/cobordism.hpp"
#include "theta/combinatorics.hpp"
#include "theta/genus.hpp"
#include "theta/hodge.hpp"
#include "theta/permutohedron.hpp"

namespace {

void BM_series_divide(benchmark::State& state) {
  for (auto _ : state) {
    auto h = theta::genus::h_gf(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_series_divide)->Arg(8)->Arg(12)->Arg(16);

void BM_hodge_diamond(benchmark::State& state) {
  for (auto _ : state) {
    auto d = theta::hodge::diamond(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_hodge_diamond)->Arg(4)->Arg(8)->Arg(12);

void BM_permutohedral_class(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  auto pt = theta::cob::random_point(n);
  for (auto _ : state) {
    auto cls = theta::cob::permutohedral_class(n, pt);
    benchmark::DoNotOptimize(cls);
  }
}
BENCHMARK(BM_permutohedral_class)->Arg(2)->Arg(3)->Arg(4);

void BM_descent_enumeration(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto row = theta::comb::eulerian_by_descents(n, static_cast<int>(n));
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(BM_descent_enumeration)->Arg(6)->Arg(8);

void BM_face_oracle(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto f = theta::perm::face_oracle(n, static_cast<int>(n));
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_face_oracle)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
