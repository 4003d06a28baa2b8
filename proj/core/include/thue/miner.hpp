#pragma once

#include <chrono>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "thue/bounds.hpp"
#include "thue/episode.hpp"
#include "thue/event_sequence.hpp"
#include "thue/occurrences.hpp"
#include "thue/topk_buffer.hpp"

namespace thue {

struct MiningConfig {
  enum class Bound { ewu_opt, ewu_original };
  enum class InitSoundness { safe, paper_faithful };
  enum class ExpansionOrder { simult_first, serial_first };

  std::int64_t k = 1;
  Timestamp mtd = 0;
  MtdSemantics semantics = MtdSemantics::inclusive;
  RuMode ru_mode = RuMode::strict;
  Bound bound = Bound::ewu_opt;

  /// Which threshold-raising lists seed the initial floor.
  bool init_single_utilities = true;   // exact 1-episode utilities
  bool init_timestamp_utilities = true;  // per-timestamp utilities

  /// `safe` keeps every seeding value a lower bound witnessed by a real
  /// episode (floor can never overshoot the true k-th utility);
  /// `paper_faithful` reproduces the historical seeding exactly, including
  /// its overshoot when fewer than k values exist.
  InitSoundness init_soundness = InitSoundness::safe;

  ExpansionOrder expansion_order = ExpansionOrder::simult_first;

  /// Fixed-threshold mode: exactly one of these (or k-mode) applies.
  std::optional<Utility> fixed_min_util;
  /// Exact fraction of the sequence total utility, numerator/denominator.
  std::optional<std::pair<std::int64_t, std::int64_t>> fixed_min_util_ratio;

  /// Search depth cap in events; 0 derives (mtd + 1) * max set size + 1.
  std::size_t depth_cap = 0;

  /// Worker threads for the expansion phase. Results are identical to the
  /// sequential run; candidate ordinals in the trace may differ.
  unsigned threads = 1;

  std::optional<std::chrono::milliseconds> timeout;

  /// Named presets: "thue" (tight bound, both seeds), "thue-ewu" (tight
  /// bound, timestamp seed only), "thue-rus" (plain bound, both seeds),
  /// "baseline" (plain bound, no seeding). Aliases: full, no-riu,
  /// original-bound. Throws std::invalid_argument for unknown names.
  static MiningConfig variant_preset(std::string_view name);
};

struct MiningStats {
  /// Episodes whose occurrence scan was materialized, 1-episodes included.
  std::uint64_t candidates{0};
  Utility initial_min_util{0};
  Utility final_min_util{0};
  /// (candidate ordinal, new floor) per floor raise; values non-decreasing.
  std::vector<std::pair<std::uint64_t, Utility>> threshold_trace;
  double elapsed_seconds{0};
  /// Peak bytes across the tracked surfaces (search frames + result
  /// buffer); best effort, not a full allocator audit.
  std::uint64_t peak_tracked_bytes{0};
};

struct HueEntry {
  Episode episode;
  Utility utility{};
  MoSet mos;
};

struct HueResult {
  /// Sorted by utility descending, then Episode::compare ascending.
  std::vector<HueEntry> episodes;
  MiningStats stats;
};

/// Exact utility of every 1-episode that occurs at least once, as
/// (episode, utility) pairs in event order.
std::vector<std::pair<Episode, Utility>> single_utility_list(
    const ComplexEventSequence& seq);

/// Per-timestamp seeding values. Paper-faithful: one value per timestamp
/// (its full utility). Safe: timestamps sharing an identical full event set
/// are grouped and their utilities summed, witnessed by the full-set
/// episode, so each value is a real episode-utility lower bound.
std::vector<std::pair<Episode, Utility>> timestamp_utility_list(
    const ComplexEventSequence& seq, MiningConfig::InitSoundness soundness);

/// k-th largest value of `values`. When fewer than k exist, safe mode
/// yields 0 (no raise) while paper_faithful yields the smallest value.
Utility kth_largest_or_default(std::vector<Utility> values, std::int64_t k,
                               MiningConfig::InitSoundness soundness);

/// Initial floor for a configuration: the k-th largest over the union of
/// the enabled seeding lists (deduplicated by witness episode in safe
/// mode, keeping each witness's largest value).
Utility initial_floor(const ComplexEventSequence& seq,
                      const MiningConfig& config);

/// Events eligible to widen the episode's last set, collected at every
/// duration-feasible occurrence end and ordered ascending.
std::vector<EventId> collect_simult_extensions(const Episode& episode,
                                               const OccurrenceScan& scan,
                                               const ComplexEventSequence& seq);

/// Events eligible to open a new set, collected over each minimal
/// occurrence's forward window and ordered ascending.
std::vector<EventId> collect_serial_extensions(const Episode& episode,
                                               const MoSet& mos,
                                               const ComplexEventSequence& seq,
                                               Timestamp mtd,
                                               MtdSemantics semantics);

/// Expands `alpha` through simultaneous extensions first (recursion below
/// covers both kinds), feeding qualifying candidates through the buffer and
/// accounting them in `stats`. Exposed for scrutiny; mine_topk drives the
/// same machinery.
void span_simult(const Episode& alpha, const ComplexEventSequence& seq,
                 const MiningConfig& config, TopKBuffer& buffer,
                 MiningStats& stats);

/// Same as span_simult but starting with serial extensions of `alpha`.
void span_serial(const Episode& alpha, const ComplexEventSequence& seq,
                 const MiningConfig& config, TopKBuffer& buffer,
                 MiningStats& stats);

/// Top-k mining: seeds the floor, walks 1-episodes in event order and
/// expands every one whose bound clears the current floor. The returned
/// utilities are exactly the top-k among all episodes with occurrences
/// (fewer only when fewer qualify above the initial floor).
HueResult mine_topk(const ComplexEventSequence& seq,
                    const MiningConfig& config);

/// Fixed-threshold mining: same search as mine_topk with a static floor
/// (fixed_min_util, or the exact ratio of total utility rounded up to the
/// next representable utility); returns every episode at or above it.
HueResult mine_fixed_threshold(const ComplexEventSequence& seq,
                               const MiningConfig& config);

}  // namespace thue
