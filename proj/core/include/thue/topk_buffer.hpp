#pragma once

#include <cstdint>
#include <vector>

#include "thue/episode.hpp"
#include "thue/occurrences.hpp"

namespace thue {

struct BufferEntry {
  Episode episode;
  Utility utility{};
  MoSet mos;
};

/// Bounded top-k collection with a monotone admission floor. Entries stay
/// sorted by utility descending, ties broken by Episode::compare ascending.
/// Once `capacity` entries are held, the floor tracks the utility of the
/// last (k-th) entry and only ever rises.
class TopKBuffer {
public:
  TopKBuffer(std::int64_t capacity, Utility initial_floor);

  std::int64_t capacity() const { return capacity_; }
  Utility floor() const { return floor_; }
  bool qualifies(Utility u) const { return u >= floor_; }

  /// Inserts an entry whose utility qualifies (caller checks), trimming
  /// past capacity. Returns true when the floor rose.
  bool insert(BufferEntry entry);

  const std::vector<BufferEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Bytes attributable to the held entries (approximate, for the tracked
  /// peak-memory statistic).
  std::uint64_t tracked_bytes() const { return tracked_bytes_; }

private:
  static std::uint64_t entry_bytes(const BufferEntry& e);

  std::vector<BufferEntry> entries_;
  std::int64_t capacity_;
  Utility floor_;
  std::uint64_t tracked_bytes_{0};
};

}  // namespace thue
