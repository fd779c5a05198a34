#include <benchmark/benchmark.h>

#include <vector>

#include "nanoword/invariants.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/moves.hpp"
#include "nanoword/nanophrase.hpp"
#include "nanoword/search.hpp"

using namespace nanoword;

namespace {

const HomotopyData& curves() {
  static const HomotopyData data = builtin_data("curves", 1);
  return data;
}

std::vector<CanonicalForm> sample(std::size_t letters, std::size_t components) {
  return enumerate_nanophrases(curves().base_system.alphabet(), letters, components);
}

void BM_Canonicalize(benchmark::State& state) {
  const auto forms = sample(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    for (const auto& f : forms) benchmark::DoNotOptimize(canonicalize(f.view()));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * forms.size()));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(3);

void BM_FindMoveSites(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto forms = sample(n, 1);
  for (auto _ : state) {
    for (const auto& f : forms) {
      benchmark::DoNotOptimize(find_move_sites(f.view(), curves().base_system, KindSet::all(), n + 2));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * forms.size()));
}
BENCHMARK(BM_FindMoveSites)->Arg(2)->Arg(3);

void BM_SoPhrase(benchmark::State& state) {
  std::vector<Nanophrase> phrases;
  for (const auto& f : sample(static_cast<std::size_t>(state.range(0)), 2)) {
    phrases.push_back(Nanophrase::from_canonical(curves().base(), f));
  }
  for (auto _ : state) {
    for (const auto& p : phrases) benchmark::DoNotOptimize(so_phrase(p, curves().base_system));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * phrases.size()));
}
BENCHMARK(BM_SoPhrase)->Arg(2)->Arg(3);

void BM_EquivalentAbab(benchmark::State& state) {
  const auto m = MoveSystem::homotopy(Alphabet::make({"a"}), {{0, 0, 0}});
  CanonicalForm from;
  from.pattern = {0, 1, 0, 1};
  from.ends = {4};
  from.proj_seq = {0, 0};
  CanonicalForm to;
  to.ends = {0};
  SearchBudget budget;
  budget.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(from, to, m, budget));
}
BENCHMARK(BM_EquivalentAbab)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
