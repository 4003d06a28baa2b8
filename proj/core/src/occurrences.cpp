#include "thue/occurrences.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace thue {

bool duration_ok(Timestamp start, Timestamp end, Timestamp mtd,
                 MtdSemantics semantics) {
  Timestamp d = end - start;
  return semantics == MtdSemantics::inclusive ? d <= mtd : d < mtd;
}

Timestamp window_end(Timestamp start, Timestamp mtd, MtdSemantics semantics) {
  return semantics == MtdSemantics::inclusive ? start + mtd
                                              : start + mtd - 1;
}

namespace {

/// Timestamps at which every event of `set` occurs, ascending.
std::vector<Timestamp> set_occurrence_timestamps(
    const ComplexEventSequence& seq, const std::vector<EventId>& set) {
  // Drive the intersection from the rarest event's occurrence list.
  const std::vector<ComplexEventSequence::EventOccurrence>* smallest =
      &seq.occurrences(set[0]);
  for (std::size_t i = 1; i < set.size(); ++i) {
    const auto& occ = seq.occurrences(set[i]);
    if (occ.size() < smallest->size())
      smallest = &occ;
  }
  std::vector<Timestamp> out;
  out.reserve(smallest->size());
  for (const auto& occ : *smallest) {
    auto idx = seq.set_index_at(occ.timestamp);
    const auto& simult = seq.sets()[*idx];
    bool all = true;
    for (EventId e : set) {
      if (!simult.find(e)) {
        all = false;
        break;
      }
    }
    if (all)
      out.push_back(occ.timestamp);
  }
  return out;
}

}  // namespace

OccurrenceScan scan_occurrences(const Episode& episode,
                                const ComplexEventSequence& seq,
                                Timestamp mtd, MtdSemantics semantics) {
  OccurrenceScan out;
  if (episode.empty() || seq.empty())
    return out;
  const std::size_t k = episode.size();
  std::vector<std::vector<Timestamp>> lists(k);
  for (std::size_t j = 0; j < k; ++j) {
    lists[j] = set_occurrence_timestamps(seq, episode.sets()[j]);
    if (lists[j].empty())
      return out;
  }

  Timestamp prev_start = std::numeric_limits<Timestamp>::min();
  for (Timestamp te : lists[k - 1]) {
    // Latest start for an occurrence ending at te: pick each earlier set as
    // late as possible, right to left.
    Timestamp t = te;
    bool feasible = true;
    for (std::size_t j = k - 1; j-- > 0;) {
      const auto& list = lists[j];
      auto it = std::lower_bound(list.begin(), list.end(), t);
      if (it == list.begin()) {
        feasible = false;
        break;
      }
      t = *std::prev(it);
    }
    if (!feasible)
      continue;
    if (!duration_ok(t, te, mtd, semantics))
      continue;
    out.feasible_ends.push_back(te);
    if (t <= prev_start)
      continue;  // swallows the interval kept before it: not minimal
    Occurrence occ;
    occ.start = t;
    occ.end = te;
    occ.embedding.resize(k);
    occ.embedding.front() = t;
    // Leftmost embedding: interior sets greedily earliest. Always lands
    // strictly before te because the latest embedding above already did.
    Timestamp prev = t;
    for (std::size_t j = 1; j + 1 < k; ++j) {
      const auto& list = lists[j];
      prev = *std::upper_bound(list.begin(), list.end(), prev);
      occ.embedding[j] = prev;
    }
    if (k >= 2)
      occ.embedding.back() = te;
    out.minimal.push_back(std::move(occ));
    prev_start = t;
  }
  return out;
}

MoSet minimal_occurrences(const Episode& episode,
                          const ComplexEventSequence& seq, Timestamp mtd,
                          MtdSemantics semantics) {
  return scan_occurrences(episode, seq, mtd, semantics).minimal;
}

Utility episode_utility_at(const Episode& episode, const Occurrence& occ,
                           const ComplexEventSequence& seq) {
  if (occ.embedding.size() != episode.size())
    throw std::logic_error("embedding does not match the episode shape");
  Utility sum = 0;
  Timestamp prev = std::numeric_limits<Timestamp>::min();
  for (std::size_t j = 0; j < episode.size(); ++j) {
    Timestamp t = occ.embedding[j];
    if (t <= prev)
      throw std::logic_error("embedding timestamps must strictly increase");
    prev = t;
    try {
      sum += seq.set_utility(episode.sets()[j], t);
    } catch (const NoOccurrenceError&) {
      throw std::logic_error("embedding points at a timestamp missing part "
                             "of the episode set");
    }
  }
  return sum;
}

Utility episode_utility(const Episode& episode,
                        const ComplexEventSequence& seq, Timestamp mtd,
                        MtdSemantics semantics) {
  Utility sum = 0;
  for (const auto& occ : minimal_occurrences(episode, seq, mtd, semantics))
    sum += episode_utility_at(episode, occ, seq);
  return sum;
}

}  // namespace thue
