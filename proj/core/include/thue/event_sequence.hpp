#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thue/event_catalog.hpp"
#include "thue/types.hpp"

namespace thue {

/// One event instance inside a simultaneous set. `utility` is the final
/// per-occurrence value: external utility x quantity for natively loaded
/// data, or the supplied per-occurrence value for transaction imports.
struct SeqItem {
  EventId event{};
  std::int64_t quantity{1};
  Utility utility{};

  bool operator==(const SeqItem&) const = default;
};

/// All events sharing one timestamp, sorted by event id.
struct SimultaneousEventSet {
  Timestamp timestamp{};
  std::vector<SeqItem> items;

  const SeqItem* find(EventId e) const;

  bool operator==(const SimultaneousEventSet&) const = default;
};

/// A single long sequence of simultaneous event sets with strictly
/// increasing timestamps, plus the catalog and the derived lookups every
/// mining pass needs: per-timestamp utilities with prefix sums and a
/// per-event occurrence index.
class ComplexEventSequence {
public:
  ComplexEventSequence() = default;

  /// Validates and indexes a fully materialized sequence. Timestamps must be
  /// strictly increasing and positive, items sorted by id and unique within
  /// a set, quantities >= 1, utilities >= 0.
  static ComplexEventSequence build(EventCatalog catalog,
                                    std::vector<SimultaneousEventSet> sets);

  /// Reads the native text format: '#' comments, "@EVENT <symbol> <utility>"
  /// catalog lines, then one "<timestamp>|<sym>:<qty> ..." line per set.
  /// Item utilities are external utility x quantity.
  static ComplexEventSequence load_native(std::istream& in);
  static ComplexEventSequence load_native(const std::string& text);
  static ComplexEventSequence load_native_file(const std::string& path);

  /// Reads transaction-per-line data ("<items>:<total>:<item utilities>").
  /// Transaction i becomes the set at timestamp i (1-based); quantities are
  /// fixed at 1 and the given per-item utilities are used directly, with
  /// every external utility set to 1.
  static ComplexEventSequence from_transactions(std::istream& in);
  static ComplexEventSequence from_transactions(const std::string& text);
  static ComplexEventSequence from_transactions_file(const std::string& path);

  const EventCatalog& catalog() const { return catalog_; }
  const std::vector<SimultaneousEventSet>& sets() const { return sets_; }
  bool empty() const { return sets_.empty(); }
  Timestamp first_timestamp() const { return sets_.front().timestamp; }
  Timestamp last_timestamp() const { return sets_.back().timestamp; }

  /// Sum of all item utilities in the sequence.
  Utility total_utility() const { return total_; }

  /// Utility of the whole set at `t`; throws NoOccurrenceError when no set
  /// exists at that timestamp.
  Utility timestamp_utility(Timestamp t) const;

  /// Utility of one event occurrence; throws NoOccurrenceError if `e` does
  /// not occur at `t`.
  Utility event_utility(EventId e, Timestamp t) const;

  /// Sum of event_utility over `events` at `t`; all of them must occur there.
  Utility set_utility(std::span<const EventId> events, Timestamp t) const;

  /// Utility still available at `t` relative to `events` (which must all
  /// occur there): under RuMode::strict only events ordered after every
  /// member, under RuMode::compat everything at `t` except the members.
  Utility remaining_utility(std::span<const EventId> events, Timestamp t,
                            RuMode mode) const;

  /// Occurrence index for one event: (timestamp, utility) pairs in timestamp
  /// order. Events that never occur yield an empty list.
  struct EventOccurrence {
    Timestamp timestamp{};
    Utility utility{};
    bool operator==(const EventOccurrence&) const = default;
  };
  const std::vector<EventOccurrence>& occurrences(EventId e) const;

  /// Index into sets() of the set at exactly `t`, if any.
  std::optional<std::size_t> set_index_at(Timestamp t) const;

  /// Index of the first set with timestamp >= t (== sets().size() if none).
  std::size_t first_set_at_or_after(Timestamp t) const;

  /// Sum of timestamp utilities over every set with timestamp in [lo, hi].
  /// Ranges reaching past either end of the sequence just contribute
  /// nothing there; an empty range yields 0.
  Utility range_total_utility(Timestamp lo, Timestamp hi) const;

  /// True when the sequence came from a transaction import and item
  /// utilities override the external-utility-times-quantity rule.
  bool has_utility_overrides() const { return overrides_; }

  /// Writes the native text format. Round-trips exactly for natively loaded
  /// data; transaction imports are re-expressed with external utility 1 and
  /// quantity equal to the per-occurrence utility, which fails with a
  /// ParseError if any occurrence utility is 0 (not representable).
  std::string serialize() const;

  bool operator==(const ComplexEventSequence& o) const {
    return catalog_ == o.catalog_ && sets_ == o.sets_;
  }

private:
  EventCatalog catalog_;
  std::vector<SimultaneousEventSet> sets_;
  std::vector<Utility> tu_;            // per set, same order as sets_
  std::vector<Utility> tu_prefix_;     // size sets_.size() + 1
  std::vector<std::vector<EventOccurrence>> occ_index_;  // by event id
  Utility total_{0};
  bool overrides_{false};
};

}  // namespace thue
