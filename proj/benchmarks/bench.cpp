#include <benchmark/benchmark.h>

#include "gsc/cancellation.hpp"
#include "gsc/dehn.hpp"
#include "gsc/geometry.hpp"
#include "gsc/shapes.hpp"
#include "gsc/word.hpp"

namespace {

using namespace gsc;

// The worked two-points-three-edges example.
LabelledGraph make_g1() {
  return LabelledGraph::parse(
      "alphabet a b c\nedge u v a\nedge u v b\nedge u v c\n");
}

// Pinned certified labellings (same parameters as the test fixtures).
LabelledGraph make_theta37() {
  return random_labelling(shapes::theta(3, 7), make_alphabet({"a", "b", "c",
                                                              "d"}),
                          2);
}

LabelledGraph make_theta518() {
  return random_labelling(shapes::theta(5, 18),
                          make_alphabet({"a", "b", "c"}), 2);
}

void BM_ParseGraph(benchmark::State& state) {
  std::string text = make_theta37().to_file_text();
  for (auto _ : state) {
    benchmark::DoNotOptimize(LabelledGraph::parse(text));
  }
}
BENCHMARK(BM_ParseGraph);

void BM_CertifySmall(benchmark::State& state) {
  auto g = make_g1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(g));
  }
}
BENCHMARK(BM_CertifySmall);

void BM_CertifyTheta37(benchmark::State& state) {
  auto g = make_theta37();
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(g));
  }
}
BENCHMARK(BM_CertifyTheta37);

void BM_LongestDoubletTheta518(benchmark::State& state) {
  auto g = make_theta518();
  for (auto _ : state) {
    benchmark::DoNotOptimize(longest_doublet(g));
  }
}
BENCHMARK(BM_LongestDoubletTheta518);

void BM_WordProblemRelatorProduct(benchmark::State& state) {
  auto g = make_theta37();
  Solver solver(g, certify(g));
  auto fam = spanning_tree(g);
  Word w;
  for (const auto& cycle_word : fam.cycle_words)
    w = free_reduce(concat(w, cycle_word));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.is_trivial(w));
  }
}
BENCHMARK(BM_WordProblemRelatorProduct);

void BM_FillLongWalk(benchmark::State& state) {
  auto g = make_theta37();
  SeededRng rng(5);
  auto fam = spanning_tree(g);
  // A long closed word: the concatenation of all cycle words, repeated.
  Word w;
  for (int i = 0; i < 4; ++i)
    for (const auto& cycle_word : fam.cycle_words)
      w = free_reduce(concat(w, cycle_word));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fill(g, fam.base, w));
  }
}
BENCHMARK(BM_FillLongWalk);

void BM_CayleyBallG1(benchmark::State& state) {
  auto g = make_g1();
  Solver solver(g, certify(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley_ball(solver, 6));
  }
}
BENCHMARK(BM_CayleyBallG1);

}  // namespace

BENCHMARK_MAIN();
