#include "thue/topk_buffer.hpp"

#include <algorithm>
#include <stdexcept>

namespace thue {

TopKBuffer::TopKBuffer(std::int64_t capacity, Utility initial_floor)
    : capacity_(capacity), floor_(initial_floor) {
  if (capacity_ < 1)
    throw std::invalid_argument("top-k capacity must be >= 1");
}

std::uint64_t TopKBuffer::entry_bytes(const BufferEntry& e) {
  std::uint64_t bytes = sizeof(BufferEntry);
  for (const auto& set : e.episode.sets())
    bytes += set.size() * sizeof(EventId);
  for (const auto& occ : e.mos)
    bytes += sizeof(Occurrence) + occ.embedding.size() * sizeof(Timestamp);
  return bytes;
}

bool TopKBuffer::insert(BufferEntry entry) {
  if (!qualifies(entry.utility))
    throw std::logic_error("inserting an entry below the floor");
  auto pos = std::upper_bound(
      entries_.begin(), entries_.end(), entry,
      [](const BufferEntry& a, const BufferEntry& b) {
        if (a.utility != b.utility)
          return a.utility > b.utility;
        return Episode::compare(a.episode, b.episode) < 0;
      });
  tracked_bytes_ += entry_bytes(entry);
  entries_.insert(pos, std::move(entry));
  if (entries_.size() > static_cast<std::size_t>(capacity_)) {
    tracked_bytes_ -= entry_bytes(entries_.back());
    entries_.pop_back();
  }
  if (entries_.size() == static_cast<std::size_t>(capacity_) &&
      entries_.back().utility > floor_) {
    floor_ = entries_.back().utility;
    return true;
  }
  return false;
}

}  // namespace thue
