#include "thue/event_catalog.hpp"

#include <algorithm>

namespace thue {

EventCatalog EventCatalog::from_entries(
    std::vector<std::pair<std::string, Utility>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  EventCatalog cat;
  cat.symbols_.reserve(entries.size());
  cat.utilities_.reserve(entries.size());
  for (auto& [sym, util] : entries) {
    if (sym.empty())
      throw ParseError(0, "empty event symbol");
    if (!cat.symbols_.empty() && cat.symbols_.back() == sym)
      throw ParseError(0, "duplicate event symbol '" + sym + "'");
    if (util < 0)
      throw ParseError(0, "negative external utility for event '" + sym + "'");
    cat.symbols_.push_back(std::move(sym));
    cat.utilities_.push_back(util);
  }
  return cat;
}

std::optional<EventId> EventCatalog::find(std::string_view symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol)
    return std::nullopt;
  return static_cast<EventId>(it - symbols_.begin());
}

EventId EventCatalog::id_of(std::string_view symbol) const {
  if (auto id = find(symbol))
    return *id;
  throw ParseError(0, "unknown event symbol '" + std::string(symbol) + "'");
}

}  // namespace thue
