#include "thue/bounds.hpp"

namespace thue {

Utility ewu(const Episode& episode, const Occurrence& occ,
            const ComplexEventSequence& seq, Timestamp mtd,
            MtdSemantics semantics) {
  return episode_utility_at(episode, occ, seq) +
         seq.range_total_utility(occ.end,
                                 window_end(occ.start, mtd, semantics));
}

Utility ewu_opt(const Episode& episode, const Occurrence& occ,
                const ComplexEventSequence& seq, Timestamp mtd,
                MtdSemantics semantics, RuMode ru_mode) {
  return episode_utility_at(episode, occ, seq) +
         seq.remaining_utility(episode.last_set(), occ.end, ru_mode) +
         seq.range_total_utility(occ.end + 1,
                                 window_end(occ.start, mtd, semantics));
}

Utility ewu_total(const Episode& episode, const ComplexEventSequence& seq,
                  Timestamp mtd, MtdSemantics semantics) {
  Utility sum = 0;
  for (const auto& occ : minimal_occurrences(episode, seq, mtd, semantics))
    sum += ewu(episode, occ, seq, mtd, semantics);
  return sum;
}

Utility ewu_opt_total(const Episode& episode, const ComplexEventSequence& seq,
                      Timestamp mtd, MtdSemantics semantics, RuMode ru_mode) {
  Utility sum = 0;
  for (const auto& occ : minimal_occurrences(episode, seq, mtd, semantics))
    sum += ewu_opt(episode, occ, seq, mtd, semantics, ru_mode);
  return sum;
}

}  // namespace thue
