#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "minram/factor_mod.hpp"
#include "minram/galois_certify.hpp"
#include "minram/perm_group.hpp"
#include "minram/poly.hpp"
#include "minram/resultant.hpp"
#include "minram/schinzel.hpp"
#include "minram/subgroups.hpp"
#include "minram/zmod.hpp"

namespace {

using namespace minram;

PolyZ random_poly(int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::vector<BigInt> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
  c.emplace_back(1);
  return PolyZ(c);
}

void bm_discriminant(benchmark::State& state) {
  std::mt19937_64 rng(42);
  PolyZ f = random_poly(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(bm_discriminant)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void bm_stabilizer_chain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PermGroup g = PermGroup::symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bm_stabilizer_chain)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

void bm_factor_poly_mod(benchmark::State& state) {
  std::mt19937_64 rng(42);
  PolyZ f = random_poly(static_cast<int>(state.range(0)), rng);
  FpCtxPtr ctx = make_fp_ctx(BigInt(1000003));
  PolyFp fbar = reduce_poly(f, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(factor_poly_mod(fbar));
}
BENCHMARK(bm_factor_poly_mod)->Arg(10)->Arg(25)->Arg(50);

void bm_normalizer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermGroup sn = PermGroup::symmetric(n);
  PermGroup h = PermGroup::cyclic(n);
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(sn, h));
}
BENCHMARK(bm_normalizer)->Arg(5)->Arg(6)->Arg(7);

void bm_subgroup_classes(benchmark::State& state) {
  PermGroup sn = PermGroup::symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_class_reps(sn));
}
BENCHMARK(bm_subgroup_classes)->Arg(4)->Arg(5);

void bm_galois_certify(benchmark::State& state) {
  PolyZ f = poly_from_ints({-1, -1, 0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(galois_certify(f));
}
BENCHMARK(bm_galois_certify);

void bm_compute_h(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<BigInt> a(static_cast<std::size_t>(n), BigInt(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_h(n, a));
}
BENCHMARK(bm_compute_h)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
