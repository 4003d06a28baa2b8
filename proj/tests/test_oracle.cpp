#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "thue/miner.hpp"
#include "thue/oracle.hpp"

using namespace thue;
using support::ep;
using support::retail;
using support::spans;
using support::utilities;

namespace {
constexpr auto incl = MtdSemantics::inclusive;
constexpr auto excl = MtdSemantics::exclusive;
}  // namespace

TEST_CASE("brute-force occurrence sets on the retail sequence") {
  const auto& seq = retail();
  CHECK(spans(naive_mo_set(ep("(B)->(C)"), seq, 2, incl)) ==
        std::vector<std::pair<Timestamp, Timestamp>>{{2, 3}, {3, 4}});
  CHECK(spans(naive_mo_set(ep("(B D)"), seq, 2, incl)) ==
        std::vector<std::pair<Timestamp, Timestamp>>{{2, 2}});
  CHECK(spans(naive_mo_set(ep("(A)->(D)"), seq, 2, excl)) ==
        std::vector<std::pair<Timestamp, Timestamp>>{{1, 2}, {4, 5}});
  CHECK(naive_mo_set(ep("(C)->(B)"), seq, 3, incl).empty());
}

TEST_CASE("exhaustive enumeration is closed under parents and canonical") {
  const auto& seq = retail();
  auto report = enumerate_all(seq, 2, incl);
  REQUIRE(!report.all_episodes.empty());

  for (std::size_t i = 1; i < report.all_episodes.size(); ++i)
    CHECK(Episode::compare(report.all_episodes[i - 1].episode,
                           report.all_episodes[i].episode) < 0);

  auto contains = [&](const Episode& e) {
    return std::any_of(report.all_episodes.begin(), report.all_episodes.end(),
                       [&](const OracleEntry& x) { return x.episode == e; });
  };
  for (const auto& entry : report.all_episodes) {
    CHECK(!entry.mos.empty());
    CHECK(entry.utility == episode_utility(entry.episode, seq, 2, incl));
    auto parent = entry.episode.parent();
    if (!parent.empty())
      CHECK(contains(parent));
  }

  REQUIRE(report.topk.size() == report.all_episodes.size());
  for (std::size_t i = 1; i < report.topk.size(); ++i) {
    const auto& a = report.topk[i - 1];
    const auto& b = report.topk[i];
    CHECK((a.utility > b.utility ||
           (a.utility == b.utility &&
            Episode::compare(a.episode, b.episode) < 0)));
  }
}

TEST_CASE("oracle top-k confirms the frozen retail results") {
  const auto& seq = retail();

  auto two = oracle_topk(seq, 2, 2, excl);
  REQUIRE(two.size() == 2);
  CHECK(two[0].episode == ep("(B C)->(A C)"));
  CHECK(two[0].utility == 13);
  CHECK(two[1].episode == ep("(B)->(C)"));
  CHECK(two[1].utility == 11);

  auto four = oracle_topk(seq, 4, 3, excl);
  CHECK(utilities(four) == std::vector<Utility>{15, 15, 15, 17});

  auto one = oracle_topk(seq, 1, 3, incl);
  REQUIRE(one.size() == 1);
  CHECK(one[0].episode == ep("(A)->(B D)->(B C)->(A C)"));
  CHECK(one[0].utility == 19);

  auto plenty = oracle_topk(seq, 10000, 2, incl);
  CHECK(plenty.size() == enumerate_all(seq, 2, incl).all_episodes.size());
}

TEST_CASE("the guard refuses oversized instances unless forced") {
  GenParams p;
  p.seed = 3;
  p.timestamps = 17;  // one past the guard
  p.event_types = 4;
  p.max_set_size = 2;
  auto big = generate(p);
  CHECK(!oracle_guard_ok(big));
  CHECK_THROWS_AS(enumerate_all(big, 1, incl), GuardError);
  CHECK_THROWS_AS(oracle_topk(big, 2, 1, incl), GuardError);
  CHECK_THROWS_AS(check_bound_soundness(big, 1, incl, RuMode::strict),
                  GuardError);
  CHECK_NOTHROW(enumerate_all(big, 1, incl, true));

  GenParams q;
  q.seed = 4;
  q.timestamps = 10;
  q.event_types = 9;  // one past the guard
  q.max_set_size = 3;
  auto wide = generate(q);
  CHECK(!oracle_guard_ok(wide));
  CHECK_THROWS_AS(enumerate_all(wide, 1, incl), GuardError);

  CHECK(oracle_guard_ok(retail()));
}

TEST_CASE("no episode beats the bound of any of its ancestors") {
  const auto& seq = retail();
  for (auto sem : {incl, excl})
    for (auto ru : {RuMode::strict, RuMode::compat}) {
      CAPTURE(int(sem));
      CAPTURE(int(ru));
      CHECK(check_bound_soundness(seq, 2, sem, ru).empty());
      CHECK(check_bound_soundness(seq, 3, sem, ru).empty());
    }
}

TEST_CASE("a negative probe delta must surface violations") {
  const auto& seq = retail();
  auto violations = check_bound_soundness(seq, 2, incl, RuMode::strict, -1);
  CHECK(!violations.empty());
  for (const auto& v : violations) {
    // every reported pair is a genuine certificate: the recorded bound is
    // the shifted one the utility beat
    CHECK(v.utility > v.bound);
    CHECK(episode_utility(v.descendant, seq, 2, incl) == v.utility);
    // the ancestor is on the descendant's construction chain
    bool on_chain = false;
    for (Episode e = v.descendant; !e.empty(); e = e.parent())
      on_chain = on_chain || e == v.ancestor;
    CHECK(on_chain);
  }
  // a large negative delta flags even more pairs
  CHECK(check_bound_soundness(seq, 2, incl, RuMode::strict, -100).size() >=
        violations.size());
}

TEST_CASE("bound soundness holds across random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto seq = small_random_instance(seed);
    CAPTURE(seed);
    for (auto sem : {incl, excl})
      for (auto ru : {RuMode::strict, RuMode::compat})
        CHECK(check_bound_soundness(seq, 2, sem, ru).empty());
  }
}

TEST_CASE("miner and oracle agree across small random instances") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto seq = small_random_instance(seed);
    CAPTURE(seed);
    for (Timestamp mtd : {1, 2}) {
      for (auto sem : {incl, excl}) {
        auto all = enumerate_all(seq, mtd, sem);
        for (std::int64_t k : {1, 4}) {
          MiningConfig c;
          c.k = k;
          c.mtd = mtd;
          c.semantics = sem;
          auto mined = mine_topk(seq, c);
          std::vector<OracleEntry> expect(
              all.topk.begin(),
              all.topk.begin() +
                  std::min<std::size_t>(k, all.topk.size()));
          REQUIRE(mined.episodes.size() == expect.size());
          for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(mined.episodes[i].episode == expect[i].episode);
            CHECK(mined.episodes[i].utility == expect[i].utility);
            CHECK(mined.episodes[i].mos == expect[i].mos);
          }
        }
      }
    }
  }
}
