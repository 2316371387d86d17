// Serial reference search versus the OpenMP kernel on minimum_edges.

#include <benchmark/benchmark.h>

#include <random>

#include "metrel/minimization.hpp"
#include "metrel/satbridge.hpp"

using namespace metrel;

namespace {

// Reduction instance from random 3-literal clauses.
VectorSet reduction_set(std::size_t vars, std::size_t clauses, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    sat::CnfFormula f{vars, {}};
    for (std::size_t j = 0; j < clauses; ++j) {
      sat::Clause c;
      for (int k = 0; k < 3; ++k) {
        auto v = static_cast<sat::Literal>(1 + rng() % vars);
        c.push_back(rng() % 2 ? v : -v);
      }
      f.clauses.push_back(c);
    }
    auto n = sat::normalize_formula(f);
    if (n.verdict == sat::NormalizedFormula::Verdict::kReduced) return sat::reduce_3sat(n).set;
  }
}

// Grid-like set: coordinates of a k x k grid graph from two corners.
VectorSet grid_set(int k) {
  std::vector<CoordVector> out;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) out.push_back({a + b, a + (k - 1 - b)});
  }
  return VectorSet(out);
}

void BM_Minimum(benchmark::State& state, const VectorSet& s) {
  SearchOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(minimum_edges(s, options).count);
}

void BM_Decide(benchmark::State& state, const VectorSet& s) {
  SearchOptions options{static_cast<int>(state.range(0))};
  auto k = minimum_edges(s).count;
  for (auto _ : state) benchmark::DoNotOptimize(bmetrel_decide(s, k - 1, options));
}

const VectorSet kReduction = reduction_set(12, 30, 1);
const VectorSet kGrid = grid_set(8);

}  // namespace

BENCHMARK_CAPTURE(BM_Minimum, reduction_12x30, kReduction)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Minimum, grid_8x8, kGrid)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decide, reduction_12x30, kReduction)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
