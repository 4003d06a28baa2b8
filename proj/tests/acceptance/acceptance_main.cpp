// Acceptance gate: eight end-to-end criteria over the mining stack, each
// printed as one [PASS]/[FAIL] line. Exit code 0 only when every criterion
// holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "thue/bounds.hpp"
#include "thue/datagen.hpp"
#include "thue/miner.hpp"
#include "thue/oracle.hpp"

using namespace thue;

namespace {

constexpr auto incl = MtdSemantics::inclusive;
constexpr auto excl = MtdSemantics::exclusive;

const ComplexEventSequence& retail() {
  static const ComplexEventSequence seq =
      ComplexEventSequence::load_native_file(std::string(THUE_TEST_DATA_DIR) +
                                             "/tiny_retail.ces");
  return seq;
}

Episode ep(const std::string& text) {
  return Episode::parse(text, retail().catalog());
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

/// Tiny assertion helper: records the first failing condition.
struct Checker {
  bool ok = true;
  std::string& detail;
  explicit Checker(std::string& d) : detail(d) {}
  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
  template <typename T, typename U>
  void equal(const T& got, const U& want, const std::string& what) {
    if (!(got == want) && ok) {
      ok = false;
      std::ostringstream ss;
      ss << what << " (got " << got << ", expected " << want << ")";
      detail = ss.str();
    }
  }
};

std::vector<Utility> utility_multiset(const HueResult& r) {
  std::vector<Utility> out;
  for (const auto& e : r.episodes)
    out.push_back(e.utility);
  std::sort(out.begin(), out.end());
  return out;
}

MiningConfig base_config(std::int64_t k, Timestamp mtd, MtdSemantics sem) {
  MiningConfig c;
  c.k = k;
  c.mtd = mtd;
  c.semantics = sem;
  return c;
}

// ---------------------------------------------------------------- criterion 1

bool worked_example_exact(std::string& detail) {
  Checker c(detail);
  const auto& seq = retail();

  c.equal(seq.total_utility(), 21, "sequence total utility");
  const Utility tu[] = {2, 4, 6, 7, 2};
  for (int i = 0; i < 5; ++i)
    c.equal(seq.timestamp_utility(i + 1), tu[i],
            "utility of timestamp " + std::to_string(i + 1));

  struct SingleRow {
    const char* episode;
    std::vector<std::pair<Timestamp, Timestamp>> mos;
    Utility utility, ewu_total, opt_compat, opt_strict;
  };
  const SingleRow singles[] = {
      {"(A)", {{1, 1}, {4, 4}}, 6, 27, 21, 21},
      {"(B)", {{2, 2}, {3, 3}}, 5, 37, 32, 32},
      {"(C)", {{3, 3}, {4, 4}}, 6, 30, 24, 17},
      {"(D)", {{2, 2}, {5, 5}}, 4, 23, 19, 17},
  };
  for (const auto& row : singles) {
    auto e = ep(row.episode);
    auto mos = minimal_occurrences(e, seq, 2, incl);
    std::vector<std::pair<Timestamp, Timestamp>> got;
    for (const auto& occ : mos)
      got.emplace_back(occ.start, occ.end);
    c.expect(got == row.mos,
             std::string("occurrence set of ") + row.episode);
    c.equal(episode_utility(e, seq, 2, incl), row.utility,
            std::string("utility of ") + row.episode);
    c.equal(ewu_total(e, seq, 2, incl), row.ewu_total,
            std::string("weighted utilization of ") + row.episode);
    c.equal(ewu_opt_total(e, seq, 2, incl, RuMode::compat), row.opt_compat,
            std::string("tightened bound (compat) of ") + row.episode);
    c.equal(ewu_opt_total(e, seq, 2, incl, RuMode::strict), row.opt_strict,
            std::string("tightened bound (strict) of ") + row.episode);
  }

  // two- and three-event episodes exercised by the walkthrough
  c.expect(minimal_occurrences(ep("(B D)"), seq, 2, incl) ==
               MoSet{{2, 2, {2}}},
           "occurrence set of (B D)");
  auto ad = minimal_occurrences(ep("(A)->(D)"), seq, 2, excl);
  c.expect(ad.size() == 2 && ad[0].start == 1 && ad[0].end == 2 &&
               ad[1].start == 4 && ad[1].end == 5,
           "occurrence set of (A)->(D)");
  c.equal(episode_utility(ep("(A)->(D)"), seq, 2, excl), 10,
          "utility of (A)->(D)");
  c.equal(episode_utility(ep("(B)->(C)"), seq, 2, incl), 11,
          "utility of (B)->(C)");

  // extension collection from the walkthrough
  auto scan_b = scan_occurrences(ep("(B)"), seq, 2, incl);
  c.expect(collect_simult_extensions(ep("(B)"), scan_b, seq) ==
               std::vector<EventId>{2, 3},
           "events widening (B)");
  auto scan_a = scan_occurrences(ep("(A)"), seq, 2, incl);
  c.expect(collect_simult_extensions(ep("(A)"), scan_a, seq) ==
               std::vector<EventId>{2},
           "events widening (A)");
  auto mos_bd = minimal_occurrences(ep("(B D)"), seq, 2, incl);
  c.expect(collect_serial_extensions(ep("(B D)"), mos_bd, seq, 2, incl) ==
               std::vector<EventId>{0, 1, 2},
           "events following (B D)");
  auto mos_ac = minimal_occurrences(ep("(A C)"), seq, 2, incl);
  c.expect(collect_serial_extensions(ep("(A C)"), mos_ac, seq, 2, incl) ==
               std::vector<EventId>{3},
           "events following (A C)");

  // threshold seeding values and the combined floor
  auto singles_list = single_utility_list(seq);
  std::map<std::string, Utility> by_name;
  for (const auto& [e, u] : singles_list)
    by_name[e.format(seq.catalog())] = u;
  c.expect(by_name ==
               std::map<std::string, Utility>{
                   {"(A)", 6}, {"(B)", 5}, {"(C)", 6}, {"(D)", 4}},
           "exact single-episode utilities");
  auto stamps = timestamp_utility_list(
      seq, MiningConfig::InitSoundness::paper_faithful);
  std::vector<Utility> stamp_values;
  for (const auto& [e, u] : stamps)
    stamp_values.push_back(u);
  std::sort(stamp_values.begin(), stamp_values.end());
  c.expect(stamp_values == std::vector<Utility>{2, 2, 4, 6, 7},
           "per-timestamp seeding values");
  c.equal(initial_floor(seq, base_config(4, 2, incl)), 6,
          "combined floor for k=4");
  c.equal(kth_largest_or_default({7, 6, 6, 6, 5, 4, 4}, 4,
                                 MiningConfig::InitSoundness::safe),
          6, "fourth largest seeding value");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 2

bool topk_exact(std::string& detail) {
  Checker c(detail);
  const auto& seq = retail();

  auto two = mine_topk(seq, base_config(2, 2, excl));
  c.equal(two.episodes.size(), std::size_t{2}, "result count for k=2");
  if (two.episodes.size() == 2) {
    c.expect(two.episodes[0].episode == ep("(B C)->(A C)") &&
                 two.episodes[0].utility == 13,
             "best episode under the one-step window");
    c.expect(two.episodes[1].episode == ep("(B)->(C)") &&
                 two.episodes[1].utility == 11,
             "second episode under the one-step window");
  }

  auto four = mine_topk(seq, base_config(4, 3, excl));
  const std::vector<std::pair<std::string, Utility>> expected_four = {
      {"(B D)->(B C)->(A C)", 17},
      {"(B)->(B C)->(A C)", 15},
      {"(B C)->(A C)->(D)", 15},
      {"(D)->(B C)->(A C)", 15}};
  c.equal(four.episodes.size(), std::size_t{4}, "result count for k=4");
  if (four.episodes.size() == 4)
    for (std::size_t i = 0; i < 4; ++i)
      c.expect(four.episodes[i].episode ==
                       ep(expected_four[i].first) &&
                   four.episodes[i].utility == expected_four[i].second,
               "entry " + std::to_string(i + 1) + " for k=4");
  c.equal(four.stats.final_min_util, 15, "final floor for k=4");

  auto one = mine_topk(seq, base_config(1, 3, incl));
  c.equal(one.episodes.size(), std::size_t{1}, "result count for k=1");
  if (!one.episodes.empty()) {
    c.equal(one.episodes[0].utility, Utility{19},
            "best utility under the two-step inclusive window");
    c.expect(one.episodes[0].episode == ep("(A)->(B D)->(B C)->(A C)"),
             "canonical winner of the utility-19 tie");
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 3

bool fixed_threshold_exact(std::string& detail) {
  Checker c(detail);
  auto cfg = base_config(1, 2, excl);
  cfg.fixed_min_util_ratio = {45, 100};
  auto r = mine_fixed_threshold(retail(), cfg);

  const std::vector<std::pair<std::string, Utility>> expected = {
      {"(B C)->(A C)", 13}, {"(B)->(C)", 11},   {"(A)->(D)", 10},
      {"(B)->(A C)", 10},   {"(B C)->(A)", 10}, {"(B D)->(B C)", 10},
      {"(C)->(A C)", 10}};
  c.equal(r.episodes.size(), expected.size(),
          "count of episodes at 45% of total utility");
  if (r.episodes.size() == expected.size())
    for (std::size_t i = 0; i < expected.size(); ++i)
      c.expect(r.episodes[i].episode == ep(expected[i].first) &&
                   r.episodes[i].utility == expected[i].second,
               "fixed-threshold entry " + std::to_string(i + 1));
  for (const auto& e : r.episodes)
    c.expect(!(e.episode == ep("(A)->(C)")),
             "(A)->(C) must stay below the threshold");
  c.equal(r.stats.initial_min_util, 10, "threshold from the exact ratio");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 4

bool random_agreement(std::string& detail, double& elapsed_out) {
  Checker c(detail);
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t comparisons = 0;

  for (std::uint64_t seed = 1; seed <= 200 && c.ok; ++seed) {
    auto seq = small_random_instance(seed);
    for (Timestamp mtd : {1, 2, 3}) {
      for (auto sem : {incl, excl}) {
        auto all = enumerate_all(seq, mtd, sem);
        for (auto ru : {RuMode::strict, RuMode::compat}) {
          for (std::int64_t k : {1, 3, 5, 10}) {
            auto cfg = base_config(k, mtd, sem);
            cfg.ru_mode = ru;
            auto mined = mine_topk(seq, cfg);
            const std::size_t want =
                std::min<std::size_t>(k, all.topk.size());
            ++comparisons;
            if (mined.episodes.size() != want) {
              c.expect(false,
                       "result count diverged on seed " +
                           std::to_string(seed));
              break;
            }
            for (std::size_t i = 0; i < want; ++i)
              if (mined.episodes[i].episode != all.topk[i].episode ||
                  mined.episodes[i].utility != all.topk[i].utility ||
                  mined.episodes[i].mos != all.topk[i].mos) {
                c.expect(false, "entry diverged on seed " +
                                    std::to_string(seed) + " (mtd " +
                                    std::to_string(mtd) + ")");
                break;
              }
          }
        }
      }
    }
  }

  elapsed_out =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (c.ok && elapsed_out >= 60.0) {
    c.expect(false, "suite took " + std::to_string(elapsed_out) +
                        " s (budget 60 s)");
  }
  if (c.ok)
    detail = std::to_string(comparisons) + " comparisons in " +
             std::to_string(elapsed_out) + " s";
  return c.ok;
}

// ---------------------------------------------------------------- criterion 5

bool bounds_never_undercut(std::string& detail) {
  Checker c(detail);
  std::size_t checks = 0;

  for (auto sem : {incl, excl})
    for (auto ru : {RuMode::strict, RuMode::compat})
      for (Timestamp mtd : {2, 3}) {
        ++checks;
        if (!check_bound_soundness(retail(), mtd, sem, ru).empty()) {
          c.expect(false, "violation on the retail sequence");
          return c.ok;
        }
      }

  for (std::uint64_t seed = 1; seed <= 200 && c.ok; ++seed) {
    auto seq = small_random_instance(seed);
    for (Timestamp mtd : {1, 2, 3})
      for (auto sem : {incl, excl})
        for (auto ru : {RuMode::strict, RuMode::compat}) {
          ++checks;
          if (!check_bound_soundness(seq, mtd, sem, ru).empty()) {
            c.expect(false, "violation on seed " + std::to_string(seed) +
                                " (mtd " + std::to_string(mtd) + ")");
            break;
          }
        }
  }
  if (c.ok)
    detail = std::to_string(checks) + " exhaustive bound audits";
  return c.ok;
}

// ---------------------------------------------------------------- criterion 6

bool pruning_dominance(std::string& detail) {
  Checker c(detail);
  for (std::uint64_t seed = 1; seed <= 20 && c.ok; ++seed) {
    GenParams p;
    p.seed = seed * 1000 + 17;
    p.timestamps = 1000;
    p.event_types = 50;
    auto seq = generate(p);
    for (std::int64_t k : {5, 10, 20}) {
      auto run = [&](const char* variant) {
        auto cfg = MiningConfig::variant_preset(variant);
        cfg.k = k;
        cfg.mtd = 2;
        cfg.semantics = incl;
        return mine_topk(seq, cfg);
      };
      auto full = run("thue");
      auto no_single_seed = run("thue-ewu");
      auto plain_bound = run("thue-rus");

      c.expect(full.stats.candidates <= no_single_seed.stats.candidates,
               "seeding failed to prune on seed " + std::to_string(seed) +
                   ", k " + std::to_string(k));
      c.expect(full.stats.candidates <= plain_bound.stats.candidates,
               "bound tightening failed to prune on seed " +
                   std::to_string(seed) + ", k " + std::to_string(k));
      auto reference = utility_multiset(full);
      c.expect(utility_multiset(no_single_seed) == reference &&
                   utility_multiset(plain_bound) == reference,
               "variants disagreed on seed " + std::to_string(seed) +
                   ", k " + std::to_string(k));
      if (!c.ok)
        break;
    }
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 7

bool threshold_monotone(std::string& detail) {
  Checker c(detail);
  std::size_t traced = 0;

  auto audit = [&](const ComplexEventSequence& seq, MiningConfig cfg) {
    auto r = mine_topk(seq, cfg);
    Utility prev = r.stats.initial_min_util;
    for (const auto& [ordinal, value] : r.stats.threshold_trace) {
      c.expect(value >= prev, "floor fell inside a trace");
      c.expect(ordinal <= r.stats.candidates,
               "trace ordinal beyond the candidate count");
      prev = value;
    }
    c.equal(r.stats.final_min_util, prev, "final floor vs trace end");
    c.expect(r.stats.initial_min_util <= r.stats.final_min_util,
             "floor ended below its seed");
    ++traced;
  };

  audit(retail(), base_config(2, 2, excl));
  audit(retail(), base_config(4, 3, excl));
  audit(retail(), base_config(1, 3, incl));
  audit(retail(), base_config(6, 2, incl));

  for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8}) {
    auto seq = small_random_instance(seed);
    audit(seq, base_config(3, 2, incl));
    audit(seq, base_config(5, 3, excl));
  }

  GenParams p;
  p.seed = 77;
  p.timestamps = 800;
  p.event_types = 40;
  auto generated = generate(p);
  for (const char* variant : {"thue", "thue-ewu", "thue-rus", "baseline"}) {
    auto cfg = MiningConfig::variant_preset(variant);
    cfg.k = 10;
    cfg.mtd = 2;
    cfg.semantics = incl;
    audit(generated, cfg);
  }

  if (c.ok)
    detail = std::to_string(traced) + " traces audited";
  return c.ok;
}

// ---------------------------------------------------------------- criterion 8

bool scales_to_long_sequences(std::string& detail) {
  Checker c(detail);
  const auto t0 = std::chrono::steady_clock::now();

  GenParams p;
  p.seed = 4242;
  p.timestamps = 10000;
  p.event_types = 150;
  p.min_set_size = 3;
  p.max_set_size = 7;
  auto seq = generate(p);

  auto cfg = base_config(10, 2, incl);
  auto simult_first = mine_topk(seq, cfg);
  cfg.expansion_order = MiningConfig::ExpansionOrder::serial_first;
  auto serial_first = mine_topk(seq, cfg);

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  c.equal(simult_first.episodes.size(), std::size_t{10},
          "full result set at scale");
  c.expect(utility_multiset(simult_first) == utility_multiset(serial_first),
           "expansion orders disagreed at scale");
  for (std::size_t i = 0; i < simult_first.episodes.size(); ++i)
    c.expect(simult_first.episodes[i].episode ==
                 serial_first.episodes[i].episode,
             "expansion orders returned different episodes");
  c.expect(elapsed < 300.0, "runtime " + std::to_string(elapsed) +
                                " s exceeded the five-minute budget");
  if (c.ok) {
    std::ostringstream ss;
    ss << "both orders in " << elapsed << " s, "
       << simult_first.stats.candidates << " candidates";
    detail = ss.str();
  }
  return c.ok;
}

}  // namespace

int main() {
  double agreement_elapsed = 0;
  std::vector<Criterion> criteria = {
      {"worked example quantities are exact",
       [](std::string& d) { return worked_example_exact(d); }},
      {"top-k results on the worked example are exact",
       [](std::string& d) { return topk_exact(d); }},
      {"fixed-threshold results at 45% are exact",
       [](std::string& d) { return fixed_threshold_exact(d); }},
      {"miner matches exhaustive search on 200 random instances",
       [&](std::string& d) { return random_agreement(d, agreement_elapsed); }},
      {"no episode utility ever exceeds an ancestor bound",
       [](std::string& d) { return bounds_never_undercut(d); }},
      {"tight bounds and seeding only ever shrink the search",
       [](std::string& d) { return pruning_dominance(d); }},
      {"the admission floor only rises",
       [](std::string& d) { return threshold_monotone(d); }},
      {"a 10k-timestamp sequence mines inside the time budget",
       [](std::string& d) { return scales_to_long_sequences(d); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok)
      ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1
              << ": " << criteria[i].name;
    if (!detail.empty())
      std::cout << " — " << detail;
    std::cout << std::endl;
  }

  if (failures == 0)
    std::cout << "all " << criteria.size() << " criteria passed"
              << std::endl;
  else
    std::cout << failures << " of " << criteria.size()
              << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
