#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thue {

/// Utilities are exact integers throughout (external utility x quantity).
using Utility = std::int64_t;

/// Timestamps are positive integers; gaps between consecutive timestamps are
/// allowed and all window arithmetic works on the values, not on positions.
using Timestamp = std::int64_t;

/// Dense event identifier. Ids are assigned by rank in the lexicographically
/// sorted symbol table, so comparing ids is exactly the event total order.
using EventId = std::uint32_t;

/// How the maximum-time-duration constraint reads "within": `inclusive`
/// admits occurrences with end - start <= mtd (windows reach start + mtd),
/// `exclusive` requires end - start < mtd (windows stop at start + mtd - 1).
enum class MtdSemantics { inclusive, exclusive };

/// Remaining-utility flavour used by the tightened bound. `strict` counts
/// only events ordered after every event of the reference set at that
/// timestamp; `compat` counts everything at the timestamp except the
/// reference set itself (never smaller than strict).
enum class RuMode { strict, compat };

/// Input could not be parsed; `line()` is 1-based, 0 when no single line is
/// at fault.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Lookup of an event/timestamp pair that is not present in the sequence.
class NoOccurrenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Refusal to run an exhaustive check on an oversized instance (bypassable
/// with an explicit force flag).
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The search exceeded its configured depth cap.
class SearchLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Cooperative wall-clock timeout fired inside a mining run.
class MiningTimeout : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace thue
