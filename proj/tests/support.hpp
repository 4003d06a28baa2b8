// Shared fixtures and helpers for the unit tests.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thue/datagen.hpp"
#include "thue/episode.hpp"
#include "thue/event_sequence.hpp"
#include "thue/occurrences.hpp"

namespace support {

/// The five-timestamp retail sequence shipped with the tests (total
/// utility 21, products A..D).
inline const thue::ComplexEventSequence& retail() {
  static const thue::ComplexEventSequence seq =
      thue::ComplexEventSequence::load_native_file(
          std::string(THUE_TEST_DATA_DIR) + "/tiny_retail.ces");
  return seq;
}

inline std::string retail_path() {
  return std::string(THUE_TEST_DATA_DIR) + "/tiny_retail.ces";
}

/// Parses an episode in display notation against the retail catalog.
inline thue::Episode ep(const std::string& text) {
  return thue::Episode::parse(text, retail().catalog());
}

/// Interval view of a MoSet for compact comparisons.
inline std::vector<std::pair<thue::Timestamp, thue::Timestamp>> spans(
    const thue::MoSet& mos) {
  std::vector<std::pair<thue::Timestamp, thue::Timestamp>> out;
  for (const auto& occ : mos)
    out.emplace_back(occ.start, occ.end);
  return out;
}

/// Utility multiset (sorted ascending) of a mining result or oracle list.
template <typename Entries>
std::vector<thue::Utility> utilities(const Entries& entries) {
  std::vector<thue::Utility> out;
  for (const auto& e : entries)
    out.push_back(e.utility);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace support
