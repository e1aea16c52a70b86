#include <benchmark/benchmark.h>

#include "knitord/amalgam_h.hpp"
#include "knitord/braid_b3.hpp"
#include "knitord/instances.hpp"
#include "knitord/verifier.hpp"
#include "knitord/words.hpp"

using namespace knitord;

namespace {

Word repeat_word(std::string_view pattern, int copies,
                 std::string_view alphabet) {
  Word unit = parse_word(pattern, alphabet);
  Word w;
  for (int i = 0; i < copies; ++i) w.insert(w.end(), unit.begin(), unit.end());
  return w;
}

void BM_FreeReduce(benchmark::State& state) {
  Word w = repeat_word("yzZY", static_cast<int>(state.range(0)), "yz");
  for (auto _ : state) benchmark::DoNotOptimize(free_reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeReduce)->Range(8, 1024)->Complexity();

void BM_HNormalize(benchmark::State& state) {
  Word w = repeat_word("yyzYZz", static_cast<int>(state.range(0)), "yz");
  for (auto _ : state) benchmark::DoNotOptimize(h_normalize(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HNormalize)->Range(8, 1024)->Complexity();

void BM_HandleReduce(benchmark::State& state) {
  Word w = repeat_word("aBAb", static_cast<int>(state.range(0)), "ab");
  for (auto _ : state) benchmark::DoNotOptimize(handle_reduce(w));
}
BENCHMARK(BM_HandleReduce)->Range(1, 16);

void BM_Burau(benchmark::State& state) {
  Word w = repeat_word("abAB", static_cast<int>(state.range(0)), "ab");
  for (auto _ : state) benchmark::DoNotOptimize(burau(w));
}
BENCHMARK(BM_Burau)->Range(8, 256);

void BM_EnumerateBall(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_ball("ab", static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateBall)->DenseRange(3, 7);

void BM_VerifySemigroupH(benchmark::State& state) {
  GroupHandle h = make_h_handle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_semigroup(h, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VerifySemigroupH)->DenseRange(2, 4);

void BM_ZSMul(benchmark::State& state) {
  MatchedPair mp = build_paper_example();
  ZSElement g1{mp.H.normalize(parse_word("yZy", "yz")),
               mp.K.normalize(parse_word("abA", "ab"))};
  ZSElement g2{mp.H.normalize(parse_word("Zyz", "yz")),
               mp.K.normalize(parse_word("Bab", "ab"))};
  for (auto _ : state) benchmark::DoNotOptimize(zs_mul(mp, g1, g2));
}
BENCHMARK(BM_ZSMul);

}  // namespace

BENCHMARK_MAIN();
