#include "thue/event_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace thue {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line,
                       const char* what) {
  if (tok.empty())
    throw ParseError(line, std::string("missing ") + what);
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(tok) + "'");
  std::int64_t value = 0;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError(line, std::string("malformed ") + what + " '" +
                                 std::string(tok) + "'");
    if (value > (INT64_MAX - 9) / 10)
      throw ParseError(line, std::string(what) + " out of range");
    value = value * 10 + (tok[i] - '0');
  }
  return tok[0] == '-' ? -value : value;
}

}  // namespace

const SeqItem* SimultaneousEventSet::find(EventId e) const {
  auto it = std::lower_bound(
      items.begin(), items.end(), e,
      [](const SeqItem& a, EventId b) { return a.event < b; });
  if (it == items.end() || it->event != e)
    return nullptr;
  return &*it;
}

ComplexEventSequence ComplexEventSequence::build(
    EventCatalog catalog, std::vector<SimultaneousEventSet> sets) {
  ComplexEventSequence seq;
  seq.catalog_ = std::move(catalog);
  seq.sets_ = std::move(sets);
  seq.occ_index_.assign(seq.catalog_.size(), {});
  seq.tu_.reserve(seq.sets_.size());
  seq.tu_prefix_.assign(1, 0);

  Timestamp prev = 0;
  for (const auto& set : seq.sets_) {
    if (set.timestamp <= prev)
      throw ParseError(0, "timestamps must be positive and strictly "
                          "increasing");
    prev = set.timestamp;
    if (set.items.empty())
      throw ParseError(0, "empty simultaneous event set");
    Utility tu = 0;
    EventId prev_event = 0;
    bool first = true;
    for (const auto& item : set.items) {
      if (item.event >= seq.catalog_.size())
        throw ParseError(0, "event id out of catalog range");
      if (!first && item.event <= prev_event)
        throw ParseError(0, "set items must be sorted by event and unique");
      first = false;
      prev_event = item.event;
      if (item.quantity < 1)
        throw ParseError(0, "quantities must be >= 1");
      if (item.utility < 0)
        throw ParseError(0, "negative occurrence utility");
      tu += item.utility;
      seq.occ_index_[item.event].push_back({set.timestamp, item.utility});
    }
    seq.tu_.push_back(tu);
    seq.tu_prefix_.push_back(seq.tu_prefix_.back() + tu);
    seq.total_ += tu;
  }
  return seq;
}

ComplexEventSequence ComplexEventSequence::load_native(std::istream& in) {
  struct DataLine {
    std::size_t line;
    Timestamp timestamp;
    std::vector<std::pair<std::string, std::int64_t>> items;  // symbol, qty
  };
  std::vector<std::pair<std::string, Utility>> catalog_entries;
  std::vector<DataLine> data;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    if (line.starts_with("@EVENT")) {
      auto toks = split_ws(line);
      if (toks.size() != 3)
        throw ParseError(lineno, "expected '@EVENT <symbol> <utility>'");
      Utility util = parse_int(toks[2], lineno, "external utility");
      if (util < 0)
        throw ParseError(lineno, "negative external utility");
      catalog_entries.emplace_back(std::string(toks[1]), util);
      continue;
    }
    auto bar = line.find('|');
    if (bar == std::string_view::npos)
      throw ParseError(lineno, "expected '<timestamp>|<event>:<qty> ...'");
    Timestamp t = parse_int(trim(line.substr(0, bar)), lineno, "timestamp");
    if (t < 1)
      throw ParseError(lineno, "timestamps must be positive");
    DataLine dl{lineno, t, {}};
    auto toks = split_ws(line.substr(bar + 1));
    if (toks.empty())
      throw ParseError(lineno, "empty simultaneous event set");
    for (auto tok : toks) {
      auto colon = tok.rfind(':');
      if (colon == std::string_view::npos || colon == 0)
        throw ParseError(lineno, "expected '<event>:<qty>', got '" +
                                     std::string(tok) + "'");
      std::int64_t qty = parse_int(tok.substr(colon + 1), lineno, "quantity");
      if (qty < 1)
        throw ParseError(lineno, "quantities must be >= 1");
      dl.items.emplace_back(std::string(tok.substr(0, colon)), qty);
    }
    data.push_back(std::move(dl));
  }

  // Duplicate symbols surface here with their line unknown; re-check first
  // so the error carries a line number.
  {
    auto sorted = catalog_entries;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i].first == sorted[i - 1].first)
        throw ParseError(0, "duplicate event symbol '" + sorted[i].first +
                                "' in catalog");
  }
  EventCatalog catalog = EventCatalog::from_entries(std::move(catalog_entries));

  std::vector<SimultaneousEventSet> sets;
  sets.reserve(data.size());
  Timestamp prev = 0;
  for (auto& dl : data) {
    if (dl.timestamp <= prev)
      throw ParseError(dl.line, "timestamps must be strictly increasing");
    prev = dl.timestamp;
    SimultaneousEventSet set;
    set.timestamp = dl.timestamp;
    for (auto& [sym, qty] : dl.items) {
      auto id = catalog.find(sym);
      if (!id)
        throw ParseError(dl.line, "event '" + sym + "' not declared with "
                                  "@EVENT");
      set.items.push_back(
          {*id, qty, catalog.external_utility(*id) * qty});
    }
    std::sort(set.items.begin(), set.items.end(),
              [](const SeqItem& a, const SeqItem& b) {
                return a.event < b.event;
              });
    for (std::size_t i = 1; i < set.items.size(); ++i)
      if (set.items[i].event == set.items[i - 1].event)
        throw ParseError(dl.line, "duplicate event in simultaneous set");
    sets.push_back(std::move(set));
  }
  return build(std::move(catalog), std::move(sets));
}

ComplexEventSequence ComplexEventSequence::load_native(
    const std::string& text) {
  std::istringstream in(text);
  return load_native(in);
}

ComplexEventSequence ComplexEventSequence::load_native_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  return load_native(in);
}

ComplexEventSequence ComplexEventSequence::from_transactions(
    std::istream& in) {
  struct Txn {
    std::size_t line;
    std::vector<std::pair<std::string, Utility>> items;  // symbol, utility
  };
  std::vector<Txn> txns;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    auto c1 = line.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : line.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
      throw ParseError(lineno,
                       "expected '<items>:<total utility>:<item utilities>'");
    auto items = split_ws(line.substr(0, c1));
    // The middle field must at least be numeric; the per-item values are
    // what actually matters downstream.
    parse_int(trim(line.substr(c1 + 1, c2 - c1 - 1)), lineno,
              "transaction utility");
    auto utils = split_ws(line.substr(c2 + 1));
    if (items.empty())
      throw ParseError(lineno, "transaction with no items");
    if (items.size() != utils.size())
      throw ParseError(lineno, "item and utility counts differ");
    Txn txn{lineno, {}};
    for (std::size_t i = 0; i < items.size(); ++i) {
      Utility u = parse_int(utils[i], lineno, "item utility");
      if (u < 0)
        throw ParseError(lineno, "negative item utility");
      txn.items.emplace_back(std::string(items[i]), u);
    }
    txns.push_back(std::move(txn));
  }
  if (txns.empty())
    throw ParseError(0, "empty sequence");

  std::vector<std::pair<std::string, Utility>> entries;
  for (const auto& txn : txns)
    for (const auto& [sym, _] : txn.items)
      entries.emplace_back(sym, 1);
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  EventCatalog catalog = EventCatalog::from_entries(std::move(entries));

  std::vector<SimultaneousEventSet> sets;
  sets.reserve(txns.size());
  Timestamp t = 0;
  for (const auto& txn : txns) {
    SimultaneousEventSet set;
    set.timestamp = ++t;
    for (const auto& [sym, util] : txn.items)
      set.items.push_back({catalog.id_of(sym), 1, util});
    std::sort(set.items.begin(), set.items.end(),
              [](const SeqItem& a, const SeqItem& b) {
                return a.event < b.event;
              });
    for (std::size_t i = 1; i < set.items.size(); ++i)
      if (set.items[i].event == set.items[i - 1].event)
        throw ParseError(txn.line, "duplicate item in transaction");
    sets.push_back(std::move(set));
  }
  auto seq = build(std::move(catalog), std::move(sets));
  seq.overrides_ = true;
  return seq;
}

ComplexEventSequence ComplexEventSequence::from_transactions(
    const std::string& text) {
  std::istringstream in(text);
  return from_transactions(in);
}

ComplexEventSequence ComplexEventSequence::from_transactions_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  return from_transactions(in);
}

Utility ComplexEventSequence::timestamp_utility(Timestamp t) const {
  auto idx = set_index_at(t);
  if (!idx)
    throw NoOccurrenceError("no events at timestamp " + std::to_string(t));
  return tu_[*idx];
}

Utility ComplexEventSequence::event_utility(EventId e, Timestamp t) const {
  auto idx = set_index_at(t);
  const SeqItem* item = idx ? sets_[*idx].find(e) : nullptr;
  if (!item)
    throw NoOccurrenceError("event '" + catalog_.symbol(e) +
                            "' does not occur at timestamp " +
                            std::to_string(t));
  return item->utility;
}

Utility ComplexEventSequence::set_utility(std::span<const EventId> events,
                                          Timestamp t) const {
  Utility sum = 0;
  for (EventId e : events)
    sum += event_utility(e, t);
  return sum;
}

Utility ComplexEventSequence::remaining_utility(std::span<const EventId> events,
                                                Timestamp t,
                                                RuMode mode) const {
  auto idx = set_index_at(t);
  if (!idx)
    throw NoOccurrenceError("no events at timestamp " + std::to_string(t));
  const auto& set = sets_[*idx];
  Utility members = 0;
  EventId max_event = 0;
  for (EventId e : events) {
    const SeqItem* item = set.find(e);
    if (!item)
      throw NoOccurrenceError("event '" + catalog_.symbol(e) +
                              "' does not occur at timestamp " +
                              std::to_string(t));
    members += item->utility;
    max_event = std::max(max_event, e);
  }
  if (mode == RuMode::compat)
    return tu_[*idx] - members;
  Utility after = 0;
  for (auto it = set.items.rbegin();
       it != set.items.rend() && it->event > max_event; ++it)
    after += it->utility;
  return after;
}

const std::vector<ComplexEventSequence::EventOccurrence>&
ComplexEventSequence::occurrences(EventId e) const {
  static const std::vector<EventOccurrence> kEmpty;
  if (e >= occ_index_.size())
    return kEmpty;
  return occ_index_[e];
}

std::optional<std::size_t> ComplexEventSequence::set_index_at(
    Timestamp t) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), t,
                             [](const SimultaneousEventSet& s, Timestamp v) {
                               return s.timestamp < v;
                             });
  if (it == sets_.end() || it->timestamp != t)
    return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

std::size_t ComplexEventSequence::first_set_at_or_after(Timestamp t) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), t,
                             [](const SimultaneousEventSet& s, Timestamp v) {
                               return s.timestamp < v;
                             });
  return static_cast<std::size_t>(it - sets_.begin());
}

Utility ComplexEventSequence::range_total_utility(Timestamp lo,
                                                  Timestamp hi) const {
  if (lo > hi)
    return 0;
  std::size_t a = first_set_at_or_after(lo);
  std::size_t b = first_set_at_or_after(hi + 1);
  return tu_prefix_[b] - tu_prefix_[a];
}

std::string ComplexEventSequence::serialize() const {
  std::ostringstream out;
  for (EventId e = 0; e < catalog_.size(); ++e)
    out << "@EVENT " << catalog_.symbol(e) << ' '
        << (overrides_ ? 1 : catalog_.external_utility(e)) << '\n';
  for (const auto& set : sets_) {
    out << set.timestamp << '|';
    bool first = true;
    for (const auto& item : set.items) {
      if (!first)
        out << ' ';
      first = false;
      std::int64_t qty = item.quantity;
      if (overrides_) {
        // Re-express per-occurrence values through quantity so the external
        // utility can be 1 across the board.
        if (item.utility == 0)
          throw ParseError(0, "occurrence with utility 0 is not "
                              "representable in the native format");
        qty = item.utility;
      }
      out << catalog_.symbol(item.event) << ':' << qty;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace thue
