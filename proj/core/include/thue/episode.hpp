#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "thue/event_catalog.hpp"
#include "thue/types.hpp"

namespace thue {

/// An episode: an ordered list of simultaneous event-id sets. Each set is a
/// non-empty, strictly ascending id list. Episodes grow only at the tail,
/// either by widening the last set (simult_concat, the new event must be
/// ordered after everything already there) or by appending a new singleton
/// set (serial_concat), so every episode has exactly one construction chain.
class Episode {
public:
  Episode() = default;

  static Episode single(EventId e) {
    return Episode(std::vector<std::vector<EventId>>{{e}});
  }

  /// Validates the shape (sets non-empty, each strictly ascending).
  explicit Episode(std::vector<std::vector<EventId>> sets);

  /// Number of simultaneous sets.
  std::size_t size() const { return sets_.size(); }

  /// Total number of events across all sets.
  std::size_t length() const;

  bool empty() const { return sets_.empty(); }
  const std::vector<std::vector<EventId>>& sets() const { return sets_; }
  const std::vector<EventId>& last_set() const { return sets_.back(); }
  EventId last_event() const { return sets_.back().back(); }

  /// Widens the last set with `e`; throws std::invalid_argument unless `e`
  /// is ordered strictly after the current last event.
  Episode simult_concat(EventId e) const;

  /// Appends the new singleton set (e); any event is allowed.
  Episode serial_concat(EventId e) const;

  /// The episode this one was built from: the same episode minus its last
  /// event. A 1-episode has no parent (empty episode returned).
  Episode parent() const;

  bool operator==(const Episode&) const = default;

  /// Deterministic total order used for tie-breaking and stable output:
  /// fewer sets first, then position-wise comparison of the id lists.
  static int compare(const Episode& a, const Episode& b);

  /// Renders as "(B D)->(A C)".
  std::string format(const EventCatalog& catalog) const;

  /// Parses the format() notation; symbols are resolved via the catalog and
  /// each set is re-sorted. Duplicate events in one set are rejected.
  static Episode parse(std::string_view text, const EventCatalog& catalog);

private:
  std::vector<std::vector<EventId>> sets_;
};

struct EpisodeHash {
  std::size_t operator()(const Episode& ep) const;
};

}  // namespace thue
