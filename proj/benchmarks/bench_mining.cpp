// Microbenchmarks for the hot paths: occurrence scanning and the full
// top-k search under the different variants.

#include <benchmark/benchmark.h>

#include "thue/datagen.hpp"
#include "thue/miner.hpp"
#include "thue/occurrences.hpp"

namespace {

using namespace thue;

const ComplexEventSequence& dataset(std::size_t timestamps) {
  static const ComplexEventSequence small = [] {
    GenParams p;
    p.seed = 99;
    p.timestamps = 1000;
    p.event_types = 50;
    return generate(p);
  }();
  static const ComplexEventSequence large = [] {
    GenParams p;
    p.seed = 99;
    p.timestamps = 10000;
    p.event_types = 100;
    p.min_set_size = 2;
    p.max_set_size = 6;
    return generate(p);
  }();
  return timestamps <= 1000 ? small : large;
}

/// A serial pair of the two most frequent events of the dataset.
Episode frequent_pair(const ComplexEventSequence& seq) {
  EventId best = 0, second = 1;
  std::size_t best_n = 0, second_n = 0;
  for (EventId e = 0; e < seq.catalog().size(); ++e) {
    auto n = seq.occurrences(e).size();
    if (n > best_n) {
      second = best;
      second_n = best_n;
      best = e;
      best_n = n;
    } else if (n > second_n) {
      second = e;
      second_n = n;
    }
  }
  return Episode::single(best).serial_concat(second);
}

void BM_ScanOccurrences(benchmark::State& state) {
  const auto& seq = dataset(state.range(0));
  auto episode = frequent_pair(seq);
  for (auto _ : state) {
    auto scan = scan_occurrences(episode, seq, 2, MtdSemantics::inclusive);
    benchmark::DoNotOptimize(scan);
  }
  state.SetItemsProcessed(state.iterations() * seq.sets().size());
}
BENCHMARK(BM_ScanOccurrences)->Arg(1000)->Arg(10000);

void BM_EpisodeUtility(benchmark::State& state) {
  const auto& seq = dataset(1000);
  auto episode = frequent_pair(seq);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        episode_utility(episode, seq, 2, MtdSemantics::inclusive));
}
BENCHMARK(BM_EpisodeUtility);

void BM_MineTopK(benchmark::State& state) {
  const auto& seq = dataset(1000);
  auto cfg = MiningConfig::variant_preset("thue");
  cfg.k = state.range(0);
  cfg.mtd = 2;
  for (auto _ : state) {
    auto r = mine_topk(seq, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MineTopK)->Arg(5)->Arg(10)->Arg(20);

void BM_MineVariant(benchmark::State& state) {
  static const char* const names[] = {"thue", "thue-ewu", "thue-rus",
                                      "baseline"};
  const auto& seq = dataset(1000);
  auto cfg = MiningConfig::variant_preset(names[state.range(0)]);
  cfg.k = 10;
  cfg.mtd = 2;
  std::uint64_t candidates = 0;
  for (auto _ : state) {
    auto r = mine_topk(seq, cfg);
    candidates = r.stats.candidates;
    benchmark::DoNotOptimize(r);
  }
  state.counters["candidates"] = static_cast<double>(candidates);
}
BENCHMARK(BM_MineVariant)->DenseRange(0, 3)
    ->ArgNames({"variant"});

void BM_MineLarge(benchmark::State& state) {
  const auto& seq = dataset(10000);
  auto cfg = MiningConfig::variant_preset("thue");
  cfg.k = 10;
  cfg.mtd = 2;
  for (auto _ : state) {
    auto r = mine_topk(seq, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MineLarge)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
