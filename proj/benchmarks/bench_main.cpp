#include <benchmark/benchmark.h>

#include "thuemorse/characters.hpp"
#include "thuemorse/dynamics.hpp"
#include "thuemorse/random.hpp"

namespace thuemorse {
namespace {

// count_L at depth k without materializing the q^k x q^k matrix.
void BM_CountL(benchmark::State& state) {
  const Algebra A(Alphabet(2));
  const Element s = A.parse("1 - x0^4");
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_L(s, k));
}
BENCHMARK(BM_CountL)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_SpreadInfinitesimal(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const Algebra A{Alphabet(q)};
  const Element s = A.one() - A.monomial(Word::generator(0).pow(ipow(q, k).get_si()));
  for (auto _ : state) benchmark::DoNotOptimize(spread_value(s));
}
BENCHMARK(BM_SpreadInfinitesimal)->Args({2, 3})->Args({2, 5})->Args({3, 4})->Args({5, 3});

void BM_SpreadRandom(benchmark::State& state) {
  Rng rng(7);
  const Algebra A(Alphabet(3));
  std::vector<Element> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_element(rng, A, 4, 6));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(spread_value(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_SpreadRandom);

void BM_IsTrivial(benchmark::State& state) {
  const Alphabet a(static_cast<unsigned>(state.range(0)));
  const auto r = WreathRecursion::thue_morse(a);
  Rng rng(8);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) {
    const Word w = random_word(rng, a, static_cast<unsigned>(state.range(1)));
    words.push_back(w * w.inverse() * theta(w, a));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial(r, words[i++ % words.size()]));
}
BENCHMARK(BM_IsTrivial)->Args({2, 8})->Args({2, 32})->Args({3, 16});

void BM_JuliaPoints(benchmark::State& state) {
  RenderConfig cfg;
  cfg.points = static_cast<std::size_t>(state.range(0));
  cfg.threads = static_cast<unsigned>(state.range(1));
  const RationalMap f = RationalMap::preset(2);
  for (auto _ : state) benchmark::DoNotOptimize(julia_points(f, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_JuliaPoints)->Args({100000, 1})->Args({100000, 0})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace thuemorse

// The distribution's libbenchmark_main.a carries LTO bytecode from another
// compiler release, so the main function is defined here.
BENCHMARK_MAIN();
