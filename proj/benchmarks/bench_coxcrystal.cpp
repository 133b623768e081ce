// Microbenchmarks for the hot paths: matrix group closure, quotient
// fingerprinting, lattice enumeration, the comparison game solver, word
// reduction and Smith normal form.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "coxcrystal/classify.hpp"
#include "coxcrystal/crystal.hpp"
#include "coxcrystal/ef_game.hpp"
#include "coxcrystal/fingerprint.hpp"
#include "coxcrystal/finite_group.hpp"
#include "coxcrystal/int_matrix.hpp"
#include "coxcrystal/lattice.hpp"
#include "coxcrystal/point_group.hpp"
#include "coxcrystal/ucw.hpp"

using namespace coxcrystal;

static void BM_PointGroupClosure_B3(benchmark::State& state) {
  std::vector<IntMatrix> gens = reflection_matrices('B', 3);
  for (auto _ : state) benchmark::DoNotOptimize(PointGroup::closure(gens));
}
BENCHMARK(BM_PointGroupClosure_B3);

static void BM_QuotientFingerprint_A2mod3(benchmark::State& state) {
  CrystalGroup g = build_affine_group(parse_family("A~2"));
  for (auto _ : state) {
    QuotientGroup q = make_quotient(g, 3);
    benchmark::DoNotOptimize(fingerprint(q));
  }
}
BENCHMARK(BM_QuotientFingerprint_A2mod3);

static void BM_QuotientFingerprint_B3mod2(benchmark::State& state) {
  CrystalGroup g = build_affine_group(parse_family("B~3"));
  for (auto _ : state) {
    QuotientGroup q = make_quotient(g, 2);
    benchmark::DoNotOptimize(fingerprint(q));
  }
}
BENCHMARK(BM_QuotientFingerprint_B3mod2);

static void BM_SublatticeEnumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sublattices(n, 24));
  state.SetLabel("index <= 24");
}
BENCHMARK(BM_SublatticeEnumeration)->Arg(2)->Arg(3);

static void BM_EfGame_Z8_vs_Z2Z4(benchmark::State& state) {
  AbelianGroup a({8}), b({2, 4});
  int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ef_game(a, b, rounds));
}
BENCHMARK(BM_EfGame_Z8_vs_Z2Z4)->Arg(2)->Arg(3);

static void BM_UcwReduce(benchmark::State& state) {
  UniversalCoxeter g(3);
  // a word that collapses to the identity through repeated cancellation
  std::vector<int> letters;
  for (int i = 0; i < 64; ++i) letters.push_back(i % 3);
  for (int i = 63; i >= 0; --i) letters.push_back(i % 3);
  for (auto _ : state) benchmark::DoNotOptimize(g.word(letters));
}
BENCHMARK(BM_UcwReduce);

static void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix m(n, n);
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (v = (v * 37 + 11) % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
