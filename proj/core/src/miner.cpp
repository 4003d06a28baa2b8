#include "thue/miner.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace thue {

namespace {

using Clock = std::chrono::steady_clock;

struct Ext {
  bool simult;
  EventId event;
};

struct SharedState {
  explicit SharedState(TopKBuffer& buf) : buffer(buf) {}

  TopKBuffer& buffer;  // guarded by mu
  std::mutex mu;
  std::atomic<Utility> floor{0};
  std::atomic<std::uint64_t> candidates{0};
  std::vector<std::pair<std::uint64_t, Utility>> trace;  // guarded by mu
  std::atomic<std::uint64_t> tracked_bytes{0};
  std::atomic<std::uint64_t> peak_bytes{0};
  std::atomic<bool> stop{false};
  std::optional<Clock::time_point> deadline;

  void track_add(std::uint64_t bytes) {
    auto cur =
        tracked_bytes.fetch_add(bytes, std::memory_order_relaxed) + bytes;
    auto peak = peak_bytes.load(std::memory_order_relaxed);
    while (cur > peak &&
           !peak_bytes.compare_exchange_weak(peak, cur,
                                             std::memory_order_relaxed)) {
    }
  }
  void track_sub(std::uint64_t bytes) {
    tracked_bytes.fetch_sub(bytes, std::memory_order_relaxed);
  }
};

std::size_t default_depth_cap(const ComplexEventSequence& seq,
                              const MiningConfig& config) {
  std::size_t max_set = 1;
  for (const auto& set : seq.sets())
    max_set = std::max(max_set, set.items.size());
  return static_cast<std::size_t>(config.mtd + 1) * max_set + 1;
}

class Engine {
public:
  Engine(const ComplexEventSequence& seq, const MiningConfig& config,
         SharedState& state)
      : seq_(seq),
        config_(config),
        state_(state),
        depth_cap_(config.depth_cap ? config.depth_cap
                                    : default_depth_cap(seq, config)) {}

  struct Evaluated {
    OccurrenceScan scan;
    Utility utility{0};
    Utility bound{0};
  };

  /// Scans one candidate, accounts it, and offers it to the buffer.
  Evaluated evaluate(const Episode& beta) {
    auto ordinal =
        state_.candidates.fetch_add(1, std::memory_order_relaxed) + 1;
    if (state_.deadline && ordinal % 256 == 0 &&
        Clock::now() > *state_.deadline) {
      state_.stop.store(true, std::memory_order_relaxed);
      throw MiningTimeout("mining timed out after " +
                          std::to_string(ordinal) + " candidates");
    }
    Evaluated ev;
    ev.scan = scan_occurrences(beta, seq_, config_.mtd, config_.semantics);
    for (const auto& occ : ev.scan.minimal) {
      ev.utility += episode_utility_at(beta, occ, seq_);
      ev.bound += config_.bound == MiningConfig::Bound::ewu_opt
                      ? ewu_opt(beta, occ, seq_, config_.mtd,
                                config_.semantics, config_.ru_mode)
                      : ewu(beta, occ, seq_, config_.mtd, config_.semantics);
    }
    offer(beta, ev);
    return ev;
  }

  /// Depth-first expansion from `root` (already evaluated). `root_kind`
  /// narrows the root's own extensions to one kind; recursion below always
  /// covers both, ordered per the configuration.
  void expand(const Episode& root, const Evaluated& root_ev,
              std::optional<bool> root_kind) {
    std::vector<Frame> stack;
    push_frame(stack, root, root_ev.scan, root_kind);
    while (!stack.empty()) {
      if (state_.stop.load(std::memory_order_relaxed))
        return;
      Frame& frame = stack.back();
      if (frame.next == frame.exts.size()) {
        state_.track_sub(frame.bytes);
        stack.pop_back();
        continue;
      }
      const Ext ext = frame.exts[frame.next++];
      Episode beta = ext.simult ? frame.episode.simult_concat(ext.event)
                                : frame.episode.serial_concat(ext.event);
      if (beta.length() > depth_cap_)
        throw SearchLimitError(
            "episode length " + std::to_string(beta.length()) +
            " exceeds the search depth cap of " + std::to_string(depth_cap_));
      Evaluated ev = evaluate(beta);
      if (!ev.scan.minimal.empty() &&
          ev.bound >= state_.floor.load(std::memory_order_relaxed))
        push_frame(stack, std::move(beta), ev.scan, std::nullopt);
    }
  }

private:
  struct Frame {
    Episode episode;
    std::vector<Ext> exts;
    std::size_t next{0};
    std::uint64_t bytes{0};
  };

  void offer(const Episode& beta, const Evaluated& ev) {
    if (ev.scan.minimal.empty())
      return;
    if (ev.utility < state_.floor.load(std::memory_order_relaxed))
      return;
    std::lock_guard lock(state_.mu);
    if (ev.utility < state_.buffer.floor())
      return;  // the floor rose while we were scanning
    auto before = state_.buffer.tracked_bytes();
    bool rose = state_.buffer.insert({beta, ev.utility, ev.scan.minimal});
    auto after = state_.buffer.tracked_bytes();
    if (after >= before)
      state_.track_add(after - before);
    else
      state_.track_sub(before - after);
    if (rose) {
      state_.floor.store(state_.buffer.floor(), std::memory_order_relaxed);
      state_.trace.emplace_back(
          state_.candidates.load(std::memory_order_relaxed),
          state_.buffer.floor());
    }
  }

  void push_frame(std::vector<Frame>& stack, Episode episode,
                  const OccurrenceScan& scan, std::optional<bool> only) {
    Frame frame;
    frame.exts = collect_exts(episode, scan, only);
    frame.episode = std::move(episode);
    frame.bytes = sizeof(Frame) + frame.exts.size() * sizeof(Ext) +
                  frame.episode.length() * sizeof(EventId);
    state_.track_add(frame.bytes);
    stack.push_back(std::move(frame));
  }

  std::vector<Ext> collect_exts(const Episode& episode,
                                const OccurrenceScan& scan,
                                std::optional<bool> only) const {
    std::vector<Ext> exts;
    auto add_simult = [&] {
      for (EventId e : collect_simult_extensions(episode, scan, seq_))
        exts.push_back({true, e});
    };
    auto add_serial = [&] {
      for (EventId e : collect_serial_extensions(episode, scan.minimal, seq_,
                                                 config_.mtd,
                                                 config_.semantics))
        exts.push_back({false, e});
    };
    if (only) {
      *only ? add_simult() : add_serial();
    } else if (config_.expansion_order ==
               MiningConfig::ExpansionOrder::simult_first) {
      add_simult();
      add_serial();
    } else {
      add_serial();
      add_simult();
    }
    return exts;
  }

  const ComplexEventSequence& seq_;
  const MiningConfig& config_;
  SharedState& state_;
  std::size_t depth_cap_;
};

void validate_common(const ComplexEventSequence& seq,
                     const MiningConfig& config) {
  (void)seq;
  if (config.mtd < 0)
    throw std::invalid_argument("mtd must be non-negative");
  if (config.threads < 1)
    throw std::invalid_argument("thread count must be >= 1");
}

/// Runs both phases over `seq`: evaluate every 1-episode, then expand each
/// one whose bound still clears the floor.
void run_search(const ComplexEventSequence& seq, const MiningConfig& config,
                SharedState& state) {
  Engine engine(seq, config, state);

  std::vector<std::pair<Episode, Engine::Evaluated>> roots;
  roots.reserve(seq.catalog().size());
  for (EventId e = 0; e < seq.catalog().size(); ++e) {
    Episode alpha = Episode::single(e);
    auto ev = engine.evaluate(alpha);
    roots.emplace_back(std::move(alpha), std::move(ev));
  }

  auto expandable = [&](const Engine::Evaluated& ev) {
    return !ev.scan.minimal.empty() &&
           ev.bound >= state.floor.load(std::memory_order_relaxed);
  };

  if (config.threads <= 1) {
    for (auto& [alpha, ev] : roots)
      if (expandable(ev))
        engine.expand(alpha, ev, std::nullopt);
    return;
  }

  std::mutex error_mu;
  std::exception_ptr first_error;
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < roots.size(); i += config.threads) {
        if (state.stop.load(std::memory_order_relaxed))
          return;
        if (expandable(roots[i].second))
          engine.expand(roots[i].first, roots[i].second, std::nullopt);
      }
    } catch (...) {
      {
        std::lock_guard lock(error_mu);
        if (!first_error)
          first_error = std::current_exception();
      }
      state.stop.store(true, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(config.threads);
  for (unsigned w = 0; w < config.threads; ++w)
    threads.emplace_back(worker, w);
  for (auto& t : threads)
    t.join();
  if (first_error)
    std::rethrow_exception(first_error);
}

HueResult collect_result(const TopKBuffer& buffer, const SharedState& state,
                         Utility initial_floor_value, Utility final_floor,
                         Clock::time_point t0) {
  HueResult res;
  res.episodes.reserve(buffer.entries().size());
  for (const auto& entry : buffer.entries())
    res.episodes.push_back({entry.episode, entry.utility, entry.mos});
  res.stats.candidates = state.candidates.load();
  res.stats.initial_min_util = initial_floor_value;
  res.stats.final_min_util = final_floor;
  res.stats.threshold_trace = state.trace;
  res.stats.peak_tracked_bytes = state.peak_bytes.load();
  res.stats.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

}  // namespace

MiningConfig MiningConfig::variant_preset(std::string_view name) {
  MiningConfig c;
  if (name == "thue" || name == "full")
    return c;
  if (name == "thue-ewu" || name == "no-riu") {
    c.init_single_utilities = false;
    return c;
  }
  if (name == "thue-rus" || name == "original-bound") {
    c.bound = Bound::ewu_original;
    return c;
  }
  if (name == "baseline") {
    c.bound = Bound::ewu_original;
    c.init_single_utilities = false;
    c.init_timestamp_utilities = false;
    return c;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

std::vector<std::pair<Episode, Utility>> single_utility_list(
    const ComplexEventSequence& seq) {
  std::vector<std::pair<Episode, Utility>> out;
  for (EventId e = 0; e < seq.catalog().size(); ++e) {
    const auto& occs = seq.occurrences(e);
    if (occs.empty())
      continue;
    Utility sum = 0;
    for (const auto& occ : occs)
      sum += occ.utility;
    out.emplace_back(Episode::single(e), sum);
  }
  return out;
}

std::vector<std::pair<Episode, Utility>> timestamp_utility_list(
    const ComplexEventSequence& seq, MiningConfig::InitSoundness soundness) {
  std::vector<std::pair<Episode, Utility>> out;
  if (soundness == MiningConfig::InitSoundness::paper_faithful) {
    for (const auto& set : seq.sets()) {
      std::vector<EventId> ids;
      Utility tu = 0;
      for (const auto& item : set.items) {
        ids.push_back(item.event);
        tu += item.utility;
      }
      out.emplace_back(Episode({std::move(ids)}), tu);
    }
    return out;
  }
  // Safe mode: a timestamp utility only lower-bounds the utility of the
  // full-set episode, and two timestamps holding the same set witness the
  // same episode, so such values must be summed rather than listed twice.
  std::map<std::vector<EventId>, Utility> grouped;
  for (const auto& set : seq.sets()) {
    std::vector<EventId> ids;
    Utility tu = 0;
    for (const auto& item : set.items) {
      ids.push_back(item.event);
      tu += item.utility;
    }
    grouped[std::move(ids)] += tu;
  }
  for (auto& [ids, tu] : grouped)
    out.emplace_back(Episode({ids}), tu);
  return out;
}

Utility kth_largest_or_default(std::vector<Utility> values, std::int64_t k,
                               MiningConfig::InitSoundness soundness) {
  if (k < 1)
    throw std::invalid_argument("k must be >= 1");
  std::sort(values.begin(), values.end(), std::greater<>());
  if (static_cast<std::size_t>(k) <= values.size())
    return values[k - 1];
  if (soundness == MiningConfig::InitSoundness::safe || values.empty())
    return 0;
  return values.back();
}

Utility initial_floor(const ComplexEventSequence& seq,
                      const MiningConfig& config) {
  if (!config.init_single_utilities && !config.init_timestamp_utilities)
    return 0;
  std::vector<Utility> values;
  if (config.init_soundness == MiningConfig::InitSoundness::paper_faithful) {
    if (config.init_single_utilities)
      for (const auto& [ep, u] : single_utility_list(seq))
        values.push_back(u);
    if (config.init_timestamp_utilities)
      for (const auto& [ep, u] : timestamp_utility_list(
               seq, MiningConfig::InitSoundness::paper_faithful))
        values.push_back(u);
  } else {
    // One value per witness episode; a witness reachable through both lists
    // keeps its larger (still sound) value.
    std::map<Episode, Utility,
             decltype([](const Episode& a, const Episode& b) {
               return Episode::compare(a, b) < 0;
             })>
        best;
    auto feed = [&](std::vector<std::pair<Episode, Utility>> list) {
      for (auto& [ep, u] : list) {
        auto [it, inserted] = best.try_emplace(std::move(ep), u);
        if (!inserted)
          it->second = std::max(it->second, u);
      }
    };
    if (config.init_single_utilities)
      feed(single_utility_list(seq));
    if (config.init_timestamp_utilities)
      feed(timestamp_utility_list(seq, MiningConfig::InitSoundness::safe));
    for (const auto& [ep, u] : best)
      values.push_back(u);
  }
  return kth_largest_or_default(std::move(values), config.k,
                                config.init_soundness);
}

std::vector<EventId> collect_simult_extensions(
    const Episode& episode, const OccurrenceScan& scan,
    const ComplexEventSequence& seq) {
  std::vector<EventId> out;
  const EventId last = episode.last_event();
  for (Timestamp te : scan.feasible_ends) {
    const auto& set = seq.sets()[*seq.set_index_at(te)];
    for (auto it = set.items.rbegin();
         it != set.items.rend() && it->event > last; ++it)
      out.push_back(it->event);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EventId> collect_serial_extensions(
    const Episode& episode, const MoSet& mos, const ComplexEventSequence& seq,
    Timestamp mtd, MtdSemantics semantics) {
  (void)episode;
  std::vector<EventId> out;
  for (const auto& occ : mos) {
    const Timestamp hi = window_end(occ.start, mtd, semantics);
    for (std::size_t i = seq.first_set_at_or_after(occ.end + 1);
         i < seq.sets().size() && seq.sets()[i].timestamp <= hi; ++i)
      for (const auto& item : seq.sets()[i].items)
        out.push_back(item.event);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void run_span(const Episode& alpha, const ComplexEventSequence& seq,
              const MiningConfig& config, TopKBuffer& buffer,
              MiningStats& stats, bool simult_root) {
  validate_common(seq, config);
  SharedState state(buffer);
  state.floor.store(buffer.floor());
  Engine engine(seq, config, state);
  auto scan = scan_occurrences(alpha, seq, config.mtd, config.semantics);
  if (!scan.minimal.empty()) {
    Engine::Evaluated ev;
    ev.scan = std::move(scan);
    engine.expand(alpha, ev, simult_root);
  }
  stats.candidates += state.candidates.load();
  for (const auto& row : state.trace)
    stats.threshold_trace.push_back(row);
  stats.final_min_util = buffer.floor();
  stats.peak_tracked_bytes =
      std::max(stats.peak_tracked_bytes, state.peak_bytes.load());
}

}  // namespace

void span_simult(const Episode& alpha, const ComplexEventSequence& seq,
                 const MiningConfig& config, TopKBuffer& buffer,
                 MiningStats& stats) {
  run_span(alpha, seq, config, buffer, stats, true);
}

void span_serial(const Episode& alpha, const ComplexEventSequence& seq,
                 const MiningConfig& config, TopKBuffer& buffer,
                 MiningStats& stats) {
  run_span(alpha, seq, config, buffer, stats, false);
}

HueResult mine_topk(const ComplexEventSequence& seq,
                    const MiningConfig& config) {
  validate_common(seq, config);
  if (config.k < 1)
    throw std::invalid_argument("k must be >= 1");
  if (config.fixed_min_util || config.fixed_min_util_ratio)
    throw std::invalid_argument(
        "top-k mining does not take a fixed threshold");
  const auto t0 = Clock::now();
  const Utility floor0 = initial_floor(seq, config);
  TopKBuffer buffer(config.k, floor0);
  SharedState state(buffer);
  state.floor.store(floor0);
  if (config.timeout)
    state.deadline = t0 + *config.timeout;
  run_search(seq, config, state);
  return collect_result(buffer, state, floor0, buffer.floor(), t0);
}

HueResult mine_fixed_threshold(const ComplexEventSequence& seq,
                               const MiningConfig& config) {
  validate_common(seq, config);
  if (config.fixed_min_util.has_value() ==
      config.fixed_min_util_ratio.has_value())
    throw std::invalid_argument(
        "fixed-threshold mining needs exactly one of an absolute threshold "
        "or a total-utility ratio");
  Utility threshold = 0;
  if (config.fixed_min_util) {
    threshold = *config.fixed_min_util;
    if (threshold < 0)
      throw std::invalid_argument("threshold must be non-negative");
  } else {
    auto [num, den] = *config.fixed_min_util_ratio;
    if (num < 0 || den < 1)
      throw std::invalid_argument("malformed threshold ratio");
    // Smallest integer utility admitted by the exact rational threshold.
    const auto product =
        static_cast<__int128>(num) * static_cast<__int128>(seq.total_utility());
    threshold = static_cast<Utility>((product + den - 1) / den);
  }
  const auto t0 = Clock::now();
  // A buffer that can never fill keeps the floor static, which makes the
  // fixed-threshold search the same machinery with a constant gate.
  TopKBuffer buffer(std::numeric_limits<std::int64_t>::max(), threshold);
  SharedState state(buffer);
  state.floor.store(threshold);
  if (config.timeout)
    state.deadline = t0 + *config.timeout;
  run_search(seq, config, state);
  return collect_result(buffer, state, threshold, threshold, t0);
}

}  // namespace thue
