#include "thue/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "thue/bounds.hpp"

namespace thue {

namespace {

constexpr std::size_t kGuardTimestamps = 16;
constexpr std::size_t kGuardEventTypes = 8;

/// Timestamps holding every event of `set`, by direct scan of the sequence.
std::vector<Timestamp> slow_set_timestamps(const ComplexEventSequence& seq,
                                           const std::vector<EventId>& set) {
  std::vector<Timestamp> out;
  for (const auto& simult : seq.sets()) {
    bool all = true;
    for (EventId e : set)
      if (!simult.find(e)) {
        all = false;
        break;
      }
    if (all)
      out.push_back(simult.timestamp);
  }
  return out;
}

}  // namespace

bool oracle_guard_ok(const ComplexEventSequence& seq) {
  return seq.sets().size() <= kGuardTimestamps &&
         seq.catalog().size() <= kGuardEventTypes;
}

MoSet naive_mo_set(const Episode& episode, const ComplexEventSequence& seq,
                   Timestamp mtd, MtdSemantics semantics) {
  if (episode.empty() || seq.empty())
    return {};
  const std::size_t k = episode.size();
  std::vector<std::vector<Timestamp>> lists(k);
  for (std::size_t j = 0; j < k; ++j) {
    lists[j] = slow_set_timestamps(seq, episode.sets()[j]);
    if (lists[j].empty())
      return {};
  }

  // All embeddings, depth-first in ascending timestamp order, so the first
  // embedding recorded for an interval is the lexicographically smallest.
  std::map<std::pair<Timestamp, Timestamp>, std::vector<Timestamp>> intervals;
  std::vector<Timestamp> emb(k);
  auto recurse = [&](auto&& self, std::size_t j, Timestamp prev) -> void {
    for (Timestamp t : lists[j]) {
      if (t <= prev)
        continue;
      emb[j] = t;
      if (j + 1 == k)
        intervals.try_emplace({emb.front(), t}, emb);
      else
        self(self, j + 1, t);
    }
  };
  recurse(recurse, 0, std::numeric_limits<Timestamp>::min());

  MoSet out;
  for (const auto& [span, embedding] : intervals) {
    const auto [start, end] = span;
    bool minimal = true;
    for (const auto& [other, other_emb] : intervals) {
      (void)other_emb;
      if (other != span && other.first >= start && other.second <= end) {
        minimal = false;
        break;
      }
    }
    if (minimal && duration_ok(start, end, mtd, semantics))
      out.push_back({start, end, embedding});
  }
  // std::map ordering already yields (start, end) ascending.
  return out;
}

OracleReport enumerate_all(const ComplexEventSequence& seq, Timestamp mtd,
                           MtdSemantics semantics, bool force) {
  if (!force && !oracle_guard_ok(seq))
    throw GuardError("instance too large for exhaustive enumeration (" +
                     std::to_string(seq.sets().size()) + " timestamps, " +
                     std::to_string(seq.catalog().size()) +
                     " event types); pass force to override");
  OracleReport report;
  const std::size_t n_events = seq.catalog().size();

  // Depth-first over the construction tree: widen the last set with any
  // later-ordered event, or append any event as a new set. Empty MoSets
  // prune the subtree, which is sound because removing an episode's last
  // event only relaxes its occurrence requirements.
  std::vector<Episode> stack;
  for (EventId e = 0; e < n_events; ++e)
    stack.push_back(Episode::single(e));
  std::reverse(stack.begin(), stack.end());
  while (!stack.empty()) {
    Episode ep = std::move(stack.back());
    stack.pop_back();
    MoSet mos = naive_mo_set(ep, seq, mtd, semantics);
    if (mos.empty())
      continue;
    Utility utility = 0;
    for (const auto& occ : mos)
      utility += episode_utility_at(ep, occ, seq);
    std::vector<Episode> children;
    for (EventId e = ep.last_event() + 1; e < n_events; ++e)
      children.push_back(ep.simult_concat(e));
    for (EventId e = 0; e < n_events; ++e)
      children.push_back(ep.serial_concat(e));
    std::reverse(children.begin(), children.end());
    for (auto& child : children)
      stack.push_back(std::move(child));
    report.all_episodes.push_back({std::move(ep), utility, std::move(mos)});
  }

  std::sort(report.all_episodes.begin(), report.all_episodes.end(),
            [](const OracleEntry& a, const OracleEntry& b) {
              return Episode::compare(a.episode, b.episode) < 0;
            });
  report.topk = report.all_episodes;
  std::sort(report.topk.begin(), report.topk.end(),
            [](const OracleEntry& a, const OracleEntry& b) {
              if (a.utility != b.utility)
                return a.utility > b.utility;
              return Episode::compare(a.episode, b.episode) < 0;
            });
  return report;
}

std::vector<OracleEntry> oracle_topk(const ComplexEventSequence& seq,
                                     std::int64_t k, Timestamp mtd,
                                     MtdSemantics semantics, bool force) {
  if (k < 1)
    throw std::invalid_argument("k must be >= 1");
  auto report = enumerate_all(seq, mtd, semantics, force);
  if (report.topk.size() > static_cast<std::size_t>(k))
    report.topk.resize(static_cast<std::size_t>(k));
  return std::move(report.topk);
}

std::vector<BoundViolation> check_bound_soundness(
    const ComplexEventSequence& seq, Timestamp mtd, MtdSemantics semantics,
    RuMode ru_mode, Utility bound_delta, bool force) {
  auto report = enumerate_all(seq, mtd, semantics, force);
  std::unordered_map<Episode, Utility, EpisodeHash> bound_of;
  bound_of.reserve(report.all_episodes.size());
  for (const auto& entry : report.all_episodes)
    bound_of.emplace(entry.episode,
                     ewu_opt_total(entry.episode, seq, mtd, semantics,
                                   ru_mode));

  std::vector<BoundViolation> violations;
  for (const auto& entry : report.all_episodes) {
    // Walk the unique construction chain: the episode itself, then each
    // ancestor obtained by stripping the last event.
    for (Episode anc = entry.episode; !anc.empty(); anc = anc.parent()) {
      auto it = bound_of.find(anc);
      Utility bound = it != bound_of.end()
                          ? it->second
                          : ewu_opt_total(anc, seq, mtd, semantics, ru_mode);
      bound += bound_delta;
      if (entry.utility > bound)
        violations.push_back({anc, entry.episode, bound, entry.utility});
    }
  }
  return violations;
}

}  // namespace thue
