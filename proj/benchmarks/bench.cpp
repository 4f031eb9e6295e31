#include <benchmark/benchmark.h>

#include <random>

#include "garland/garland.hpp"
#include "garland/oracle.hpp"
#include "garland/surface.hpp"
#include "garland/word.hpp"

using namespace garland;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int len) {
  Letters ls;
  while (static_cast<int>(ls.size()) < len) {
    Letter l{static_cast<int>(rng() % static_cast<unsigned>(rank)) + 1, rng() % 2 ? 1 : -1};
    if (!ls.empty() && ls.back() == inverse(l)) continue;
    ls.push_back(l);
  }
  return Word(ls);
}

void BM_conjugacy_class(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Word w = random_word(rng, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_class(w));
}
BENCHMARK(BM_conjugacy_class)->Arg(8)->Arg(64)->Arg(512);

void BM_conjugator(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Word u = random_word(rng, 2, static_cast<int>(state.range(0)));
  const Word v = conjugate(random_word(rng, 2, 6), u);
  for (auto _ : state) benchmark::DoNotOptimize(conjugator(u, v));
}
BENCHMARK(BM_conjugator)->Arg(8)->Arg(64);

void BM_linked_pairs(benchmark::State& state) {
  const RibbonSurface& s = builtin_surface("torus1");
  // powers of distinct roots: admissible at every size
  const LoopClass l1 = make_loop(power(parse_word("ab"), state.range(0)));
  const LoopClass l2 = make_loop(power(parse_word("aB"), state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linked_pairs(s, l1, l2));
}
BENCHMARK(BM_linked_pairs)->Arg(4)->Arg(8)->Arg(16);

void BM_lie_bracket(benchmark::State& state) {
  const RibbonSurface& s = builtin_surface("section13");
  const GarlandElement e1 = loop_class(parse_word("aBB"));
  const GarlandElement e2 = loop_class(parse_word("aB"));
  for (auto _ : state) benchmark::DoNotOptimize(lie_bracket(e1, e2, s));
}
BENCHMARK(BM_lie_bracket);

void BM_min_intersection(benchmark::State& state) {
  const RibbonSurface& s = builtin_surface("section13");
  const Word d1 = parse_word("aBB"), d2 = parse_word("aB");
  for (auto _ : state) benchmark::DoNotOptimize(min_intersection_number(s, d1, d2));
}
BENCHMARK(BM_min_intersection);

void BM_brute_conjugator(benchmark::State& state) {
  const Word u = parse_word("BBa");
  const Word v = parse_word("aBB");
  const oracle::SearchBounds bounds{static_cast<int>(state.range(0)), 12};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_conjugator_search(u, v, bounds));
}
BENCHMARK(BM_brute_conjugator)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
