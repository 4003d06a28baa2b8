#include "thue/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace thue {

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Rejection sampling to stay exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double SplitMix64::gaussian() {
  double u1 = unit();
  while (u1 <= 0.0)
    u1 = unit();
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

void validate(const GenParams& p) {
  if (p.timestamps < 1)
    throw std::invalid_argument("need at least one timestamp");
  if (p.event_types < 1)
    throw std::invalid_argument("need at least one event type");
  if (p.min_set_size < 1 || p.min_set_size > p.max_set_size)
    throw std::invalid_argument("set size bounds out of order");
  if (p.max_set_size > p.event_types)
    throw std::invalid_argument(
        "max set size exceeds the number of event types");
  if (p.min_quantity < 1 || p.min_quantity > p.max_quantity)
    throw std::invalid_argument("quantity bounds out of order");
  if (p.util_min < 0 || p.util_min > p.util_max)
    throw std::invalid_argument("utility bounds out of order");
  if (p.duplicate_set_probability < 0.0 ||
      p.duplicate_set_probability > 1.0)
    throw std::invalid_argument("duplicate probability outside [0, 1]");
}

std::string event_symbol(std::size_t index, std::size_t total) {
  int width = 1;
  for (std::size_t v = total > 0 ? total - 1 : 0; v >= 10; v /= 10)
    ++width;
  width = std::max(width, 3);
  char buf[32];
  std::snprintf(buf, sizeof buf, "E%0*zu", width, index);
  return buf;
}

Utility draw_utility(SplitMix64& rng, const GenParams& p) {
  const double value =
      std::exp(p.util_mu + p.util_sigma * rng.gaussian()) * p.util_scale;
  const auto rounded = static_cast<Utility>(std::llround(value));
  return std::clamp(rounded, p.util_min, p.util_max);
}

}  // namespace

ComplexEventSequence generate(const GenParams& params) {
  validate(params);
  SplitMix64 rng(params.seed);

  std::vector<std::pair<std::string, Utility>> entries;
  entries.reserve(params.event_types);
  for (std::size_t i = 0; i < params.event_types; ++i)
    entries.emplace_back(event_symbol(i, params.event_types),
                         draw_utility(rng, params));
  EventCatalog catalog = EventCatalog::from_entries(std::move(entries));

  std::vector<SimultaneousEventSet> sets;
  sets.reserve(params.timestamps);
  std::vector<EventId> pool(params.event_types);
  for (std::size_t i = 0; i < params.event_types; ++i)
    pool[i] = static_cast<EventId>(i);

  for (std::size_t i = 0; i < params.timestamps; ++i) {
    if (i > 0 && rng.unit() < params.duplicate_set_probability) {
      SimultaneousEventSet copy = sets[rng.below(i)];
      copy.timestamp = static_cast<Timestamp>(i + 1);
      sets.push_back(std::move(copy));
      continue;
    }
    const auto size = static_cast<std::size_t>(rng.range(
        static_cast<std::int64_t>(params.min_set_size),
        static_cast<std::int64_t>(params.max_set_size)));
    // Partial Fisher-Yates over the id pool picks `size` distinct events.
    for (std::size_t j = 0; j < size; ++j)
      std::swap(pool[j], pool[j + rng.below(pool.size() - j)]);
    SimultaneousEventSet set;
    set.timestamp = static_cast<Timestamp>(i + 1);
    set.items.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
      const EventId e = pool[j];
      const std::int64_t qty =
          rng.range(params.min_quantity, params.max_quantity);
      set.items.push_back({e, qty, catalog.external_utility(e) * qty});
    }
    std::sort(set.items.begin(), set.items.end(),
              [](const SeqItem& a, const SeqItem& b) {
                return a.event < b.event;
              });
    sets.push_back(std::move(set));
  }
  return ComplexEventSequence::build(std::move(catalog), std::move(sets));
}

ComplexEventSequence small_random_instance(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xd1b54a32d192ed03ull);
  GenParams p;
  p.timestamps = 4 + rng.below(9);           // 4..12
  p.event_types = 2 + rng.below(4);          // 2..5
  p.min_set_size = 1;
  p.max_set_size = std::min<std::size_t>(3, p.event_types);
  p.min_quantity = 1;
  p.max_quantity = 3;
  // Single-digit utilities keep oracle sums easy to eyeball.
  p.util_scale = 3.0;
  p.util_min = 1;
  p.util_max = 9;
  p.duplicate_set_probability = seed % 7 == 0 ? 1.0 : 0.15;
  p.seed = rng.next();
  return generate(p);
}

}  // namespace thue
