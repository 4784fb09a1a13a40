#include <random>

#include <benchmark/benchmark.h>

#include "fpg/abelian.hpp"
#include "fpg/census.hpp"
#include "fpg/coset.hpp"
#include "fpg/low_index.hpp"
#include "fpg/rewriting.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-50, 50);
  fpg::IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(fpg::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

void BM_CosetEnumeration(benchmark::State& state) {
  // PSL(2,7), A5 and a Coxeter group of order 1152 (F4 type).
  static const char* const groups[] = {
      "< a, b | a^2, b^3, (a*b)^7, [a,b]^4 >",
      "< a, b | a^2, b^3, (a*b)^5 >",
      "< a, b, c, d | a^2, b^2, c^2, d^2, (a*b)^3, (b*c)^4, (c*d)^3, (a*c)^2, (a*d)^2, (b*d)^2 >",
  };
  const auto p = fpg::parse_presentation(groups[state.range(0)]);
  std::size_t index = 0;
  for (auto _ : state) index = fpg::coset_enumerate(p, {}).index();
  state.counters["cosets"] = static_cast<double>(index);
}
BENCHMARK(BM_CosetEnumeration)->DenseRange(0, 2);

void BM_LowIndexSurface(benchmark::State& state) {
  const auto p = fpg::parse_presentation("< a1, b1, a2, b2 | [a1,b1]*[a2,b2] >");
  std::size_t count = 0;
  for (auto _ : state) count = fpg::low_index_subgroups(p, static_cast<std::size_t>(state.range(0))).size();
  state.counters["subgroups"] = static_cast<double>(count);
}
BENCHMARK(BM_LowIndexSurface)->DenseRange(2, 4);

void BM_LowIndexFree(benchmark::State& state) {
  const auto p = fpg::parse_presentation("< a, b | >");
  for (auto _ : state)
    benchmark::DoNotOptimize(fpg::low_index_subgroups(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LowIndexFree)->DenseRange(3, 6);

void BM_CensusFixtures(benchmark::State& state) {
  const fpg::CensusOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(fpg::run_census(FPG_FIXTURE_DIR "/census", options));
}
BENCHMARK(BM_CensusFixtures);

void BM_CensusSurface(benchmark::State& state) {
  const auto p = fpg::parse_presentation("< a1, b1, a2, b2 | [a1,b1]*[a2,b2] >");
  for (auto _ : state) benchmark::DoNotOptimize(fpg::census_presentation("genus2", p, fpg::CensusOptions{}));
}
BENCHMARK(BM_CensusSurface)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
