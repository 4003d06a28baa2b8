#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thue/types.hpp"

namespace thue {

/// Immutable symbol table mapping event symbols to dense ids plus their
/// per-unit external utilities. Symbols are stored sorted, so an id doubles
/// as the event's rank under the lexicographic total order.
class EventCatalog {
public:
  EventCatalog() = default;

  /// Builds a catalog from (symbol, external utility) pairs. Symbols must be
  /// unique and non-empty, utilities non-negative; entries are sorted here.
  static EventCatalog from_entries(
      std::vector<std::pair<std::string, Utility>> entries);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  std::optional<EventId> find(std::string_view symbol) const;

  /// Like find() but throws ParseError for unknown symbols.
  EventId id_of(std::string_view symbol) const;

  const std::string& symbol(EventId id) const { return symbols_.at(id); }
  Utility external_utility(EventId id) const { return utilities_.at(id); }

  bool operator==(const EventCatalog&) const = default;

private:
  std::vector<std::string> symbols_;  // sorted ascending; index == EventId
  std::vector<Utility> utilities_;
};

}  // namespace thue
