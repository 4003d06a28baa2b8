#pragma once

#include <vector>

#include "thue/episode.hpp"
#include "thue/event_sequence.hpp"
#include "thue/occurrences.hpp"

namespace thue {

/// Exhaustive reference results. Everything here is computed the slow,
/// obviously-correct way — full embedding enumeration, no windows-first
/// shortcuts — so it can adjudicate the production scan and miner.

struct OracleEntry {
  Episode episode;
  Utility utility{};
  MoSet mos;
};

struct OracleReport {
  /// Every episode with at least one occurrence, in Episode::compare order.
  std::vector<OracleEntry> all_episodes;
  /// The same entries re-sorted by utility descending (Episode::compare as
  /// tie-break); callers truncate to their k.
  std::vector<OracleEntry> topk;
};

struct BoundViolation {
  Episode ancestor;
  Episode descendant;
  Utility bound{};
  Utility utility{};
};

/// Size cap for the exhaustive routines; instances beyond it only run with
/// force=true.
bool oracle_guard_ok(const ComplexEventSequence& seq);

/// MoSet by brute force: enumerate every embedding, keep intervals not
/// properly containing another occurrence, then apply the duration
/// constraint; embeddings are the lexicographically smallest per interval.
MoSet naive_mo_set(const Episode& episode, const ComplexEventSequence& seq,
                   Timestamp mtd, MtdSemantics semantics);

/// Enumerates every episode with a non-empty MoSet by expanding all
/// single events through every admissible extension, pruning only nodes
/// without occurrences. Throws GuardError on oversized input unless forced.
OracleReport enumerate_all(const ComplexEventSequence& seq, Timestamp mtd,
                           MtdSemantics semantics, bool force = false);

/// Top-k entries of enumerate_all.
std::vector<OracleEntry> oracle_topk(const ComplexEventSequence& seq,
                                     std::int64_t k, Timestamp mtd,
                                     MtdSemantics semantics,
                                     bool force = false);

/// Checks that no episode's exhaustively computed utility exceeds the
/// tightened bound of any of its construction ancestors (the episode
/// itself included). `bound_delta` shifts every bound before comparing —
/// strictly for harness self-tests, where a negative delta must surface
/// violations.
std::vector<BoundViolation> check_bound_soundness(
    const ComplexEventSequence& seq, Timestamp mtd, MtdSemantics semantics,
    RuMode ru_mode, Utility bound_delta = 0, bool force = false);

}  // namespace thue
