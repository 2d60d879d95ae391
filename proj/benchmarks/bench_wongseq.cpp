#include <random>

#include <benchmark/benchmark.h>

#include "wongseq/wongseq.hpp"

using namespace wongseq;

namespace {

Matrix<RationalField> random_integer_matrix(std::size_t n, std::mt19937_64& rng) {
  RationalField q;
  std::uniform_int_distribution<long> d(-50, 50);
  Matrix<RationalField> m(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

static void BM_RankGFp(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto f = FiniteField::prime(65521);
  const auto m = gallery::random_matrix(f, state.range(0), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankGFp)->RangeMultiplier(2)->Range(8, 128);

static void BM_RankGF256(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto f = FiniteField::of_order(2, 8);
  const auto m = gallery::random_matrix(f, state.range(0), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankGF256)->RangeMultiplier(2)->Range(8, 64);

static void BM_RankRational(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto m = random_integer_matrix(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->RangeMultiplier(2)->Range(4, 32);

static void BM_SmrRank1(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto f = FiniteField::prime(101);
  const std::size_t n = state.range(0);
  const auto sp = gallery::random_rank1_space(f, n, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(smr(sp).rank);
}
BENCHMARK(BM_SmrRank1)->DenseRange(4, 16, 4);

static void BM_TriAlgo(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto f = FiniteField::prime(101);
  const std::size_t n = state.range(0);
  const auto inst = gallery::random_triangular(f, n, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tri_algo(f, n, inst.gens).kind);
}
BENCHMARK(BM_TriAlgo)->DenseRange(4, 16, 4);

static void BM_RationalSdit(benchmark::State& state) {
  std::mt19937_64 rng(6);
  RationalField q;
  const std::size_t n = state.range(0);
  std::vector<Matrix<RationalField>> gens;
  for (int k = 0; k < 2; ++k) {
    Matrix<RationalField> t(q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) t(i, j) = static_cast<long>(rng() % 7) - 3;
    t(0, 0) = 1;
    gens.push_back(t);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rational_sdit(gens).nonsingular);
}
BENCHMARK(BM_RationalSdit)->DenseRange(2, 8, 2);

static void BM_BruteDiscStrictUpperSk3(benchmark::State& state) {
  const auto sp = gallery::strict_upper_embed(gallery::sk3(FiniteField::prime(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(brute_disc(sp).disc);
}
BENCHMARK(BM_BruteDiscStrictUpperSk3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
