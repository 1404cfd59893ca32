#include <benchmark/benchmark.h>

#include "boolfrac/lang.hpp"
#include "boolfrac/lawcheck.hpp"
#include "boolfrac/probability.hpp"
#include "boolfrac/relations.hpp"

using namespace boolfrac;

namespace {

SampleSpace space_of(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 1; i <= n; ++i) atoms.push_back(std::to_string(i));
  return SampleSpace(atoms);
}

constexpr std::string_view kDie = R"(space DIE
atoms 1 2 3 4 5 6
event two  = {2}
event even = {2,4,6}
event odd  = {1,3,5}
event lt4  = {1,2,3}
event lt5  = {1,2,3,4}
event five = {5}
measure uniform = 1 1 1 1 1 1
)";

}  // namespace

// All ordered pairs of 4-atom conditionals through one binary operation.
template <Conditional (*Op)(const Conditional&, const Conditional&)>
void BM_PairSweep(benchmark::State& state) {
  const auto all = enumerate_conditionals(space_of(4));
  for (auto _ : state) {
    for (const auto& x : all) {
      for (const auto& y : all) benchmark::DoNotOptimize(Op(x, y));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size() * all.size()));
}
BENCHMARK(BM_PairSweep<conjunction>)->Name("pairs/conjunction");
BENCHMARK(BM_PairSweep<disjunction>)->Name("pairs/disjunction");
BENCHMARK(BM_PairSweep<sasaki>)->Name("pairs/sasaki");

void BM_Subalgebra(benchmark::State& state) {
  const auto all = enumerate_conditionals(space_of(3));
  for (auto _ : state) {
    for (const auto& x : all) {
      for (const auto& y : all) benchmark::DoNotOptimize(generated_subalgebra(x, y).is_boolean);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size() * all.size()));
}
BENCHMARK(BM_Subalgebra)->Unit(benchmark::kMillisecond);

void BM_ProbabilityDieBet(benchmark::State& state) {
  const SpaceDoc doc = parse_space(kDie);
  const Measure& m = *doc.find_measure("uniform");
  const Conditional bet = lower(parse_expr("(two|even) or (lt4|lt5)"), doc);
  for (auto _ : state) benchmark::DoNotOptimize(p_cond(m, bet));
}
BENCHMARK(BM_ProbabilityDieBet);

void BM_ParseAndLower(benchmark::State& state) {
  const SpaceDoc doc = parse_space(kDie);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower(parse_expr("proj((lt4|lt5), (two|even)) or ~(odd and five | lt5)"), doc));
  }
}
BENCHMARK(BM_ParseAndLower);

void BM_Law(benchmark::State& state, LawId law, std::size_t atoms) {
  for (auto _ : state) {
    const LawReport r = check(law, atoms);
    if (!r.passed) state.SkipWithError("law failed");
    state.counters["instances"] = static_cast<double>(r.instances_checked);
  }
}
BENCHMARK_CAPTURE(BM_Law, t2_4_at_4, LawId::kConjunctionDistributivity, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Law, t3_17_at_4, LawId::kCompatibility, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Law, t2_13_at_3, LawId::kAdditiveLaw, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Law, t3_2_at_3, LawId::kSimultaneousVerifiability, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
