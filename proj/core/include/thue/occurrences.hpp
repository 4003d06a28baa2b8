#pragma once

#include <vector>

#include "thue/episode.hpp"
#include "thue/event_sequence.hpp"
#include "thue/types.hpp"

namespace thue {

/// One occurrence of an episode: the covering interval plus the embedding,
/// one timestamp per episode set (embedding.front() == start,
/// embedding.back() == end). Embeddings are leftmost: the first and last
/// sets are pinned to the interval ends and every interior set takes the
/// earliest feasible timestamp.
struct Occurrence {
  Timestamp start{};
  Timestamp end{};
  std::vector<Timestamp> embedding;

  bool operator==(const Occurrence&) const = default;
};

/// Minimal occurrences sorted by (start, end); pairwise non-nested, with
/// strictly increasing starts and ends.
using MoSet = std::vector<Occurrence>;

/// Whether an occurrence spanning [start, end] satisfies the duration
/// constraint under the given semantics.
bool duration_ok(Timestamp start, Timestamp end, Timestamp mtd,
                 MtdSemantics semantics);

/// Last timestamp (before clamping to the sequence) a window anchored at
/// `start` may reach.
Timestamp window_end(Timestamp start, Timestamp mtd, MtdSemantics semantics);

/// Everything one pass over the per-set occurrence lists yields: the
/// minimal occurrences, plus every end timestamp that closes *some*
/// duration-satisfying occurrence (a superset of the minimal ends — ends
/// whose tightest occurrence is swallowed by an earlier minimal one still
/// appear here). Tail extensions must consider all of these ends, not just
/// the minimal ones, or episodes whose wider set only co-occurs at a
/// swallowed end are silently lost.
struct OccurrenceScan {
  MoSet minimal;
  std::vector<Timestamp> feasible_ends;
};

/// Single left-to-right scan computing minimal occurrences: it walks the
/// end timestamps of the last set in order, takes the latest feasible start
/// via a right-to-left greedy pass, and keeps the interval iff its start
/// strictly exceeds the previously kept start (an unchanged start means the
/// new interval swallows an earlier one).
OccurrenceScan scan_occurrences(const Episode& episode,
                                const ComplexEventSequence& seq,
                                Timestamp mtd, MtdSemantics semantics);

/// Just the MoSet of scan_occurrences().
MoSet minimal_occurrences(const Episode& episode,
                          const ComplexEventSequence& seq, Timestamp mtd,
                          MtdSemantics semantics);

/// Utility of the episode priced at one occurrence's embedding. Throws
/// std::logic_error if the embedding does not fit the episode.
Utility episode_utility_at(const Episode& episode, const Occurrence& occ,
                           const ComplexEventSequence& seq);

/// Total utility: sum of episode_utility_at over the episode's MoSet.
Utility episode_utility(const Episode& episode,
                        const ComplexEventSequence& seq, Timestamp mtd,
                        MtdSemantics semantics);

}  // namespace thue
