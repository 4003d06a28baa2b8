#pragma once

#include "thue/occurrences.hpp"

namespace thue {

/// Episode-weighted utilization of one occurrence: its own utility plus the
/// full utility of every timestamp from the occurrence end through the
/// window end (windows running past the sequence contribute nothing
/// beyond the last timestamp). An upper bound on the utility any tail
/// extension can realize from this occurrence.
Utility ewu(const Episode& episode, const Occurrence& occ,
            const ComplexEventSequence& seq, Timestamp mtd,
            MtdSemantics semantics);

/// Tightened variant: the occurrence-end timestamp contributes only the
/// utility still extendable there — the remaining utility relative to the
/// episode's last set — instead of its full timestamp utility.
Utility ewu_opt(const Episode& episode, const Occurrence& occ,
                const ComplexEventSequence& seq, Timestamp mtd,
                MtdSemantics semantics, RuMode ru_mode);

/// Sum of ewu over the episode's minimal occurrences (0 when none).
Utility ewu_total(const Episode& episode, const ComplexEventSequence& seq,
                  Timestamp mtd, MtdSemantics semantics);

/// Sum of ewu_opt over the episode's minimal occurrences (0 when none).
Utility ewu_opt_total(const Episode& episode, const ComplexEventSequence& seq,
                      Timestamp mtd, MtdSemantics semantics, RuMode ru_mode);

}  // namespace thue
