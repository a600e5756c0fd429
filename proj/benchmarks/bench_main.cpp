#include <benchmark/benchmark.h>

#include <random>

#include "sqfres/sqfres.hpp"

using namespace sqfres;

namespace {

MonomialIdeal letters(const char* s) { return parse_ideal_text(s, ParseOptions{.letters = true}); }

void BM_BettiSix(benchmark::State& state) {
  const auto I = letters("xy,yz,xz,za,ab,bc");
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(I));
}
BENCHMARK(BM_BettiSix);

void BM_BettiGraph(benchmark::State& state) {
  const auto I = letters("ax,ay,bz,bv,bw,cu,cg,yz,az");
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(I, FieldSpec::rationals(), {}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BettiGraph)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_WellOrderedSearch(benchmark::State& state) {
  const auto I = letters("abc,bcd,cdf,def,eg,fg,gh,hi,gi,fi,gx,gy");
  for (auto _ : state) benchmark::DoNotOptimize(find_well_ordered_covers(I));
}
BENCHMARK(BM_WellOrderedSearch)->Unit(benchmark::kMillisecond);

SparseMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix dense(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng() % 4 == 0) dense(r, c) = static_cast<std::int64_t>(rng() % 3) - 1;
  return SparseMatrix::from_dense(dense);
}

void BM_RankRationals(benchmark::State& state) {
  const auto M = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_rank(M, FieldSpec::rationals()));
}
BENCHMARK(BM_RankRationals)->Arg(64)->Arg(256);

void BM_RankModP(benchmark::State& state) {
  const auto M = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_rank(M, FieldSpec::prime_field(32003)));
}
BENCHMARK(BM_RankModP)->Arg(64)->Arg(256);

}  // namespace
BENCHMARK_MAIN();
