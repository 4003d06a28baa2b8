#include "doctest.h"
#include "support.hpp"
#include "thue/bounds.hpp"
#include "thue/oracle.hpp"

using namespace thue;
using support::ep;
using support::retail;

namespace {
constexpr auto incl = MtdSemantics::inclusive;
}

TEST_CASE("weighted-utilization bound on the retail singles") {
  const auto& seq = retail();
  const struct {
    const char* episode;
    Utility per_occurrence[2];
    Utility total;
  } rows[] = {
      {"(A)", {14, 13}, 27},
      {"(B)", {19, 18}, 37},
      {"(C)", {18, 12}, 30},
      {"(D)", {19, 4}, 23},  // the window past 5 contributes nothing
  };
  for (const auto& row : rows) {
    CAPTURE(row.episode);
    auto e = ep(row.episode);
    auto mos = minimal_occurrences(e, seq, 2, incl);
    REQUIRE(mos.size() == 2);
    CHECK(ewu(e, mos[0], seq, 2, incl) == row.per_occurrence[0]);
    CHECK(ewu(e, mos[1], seq, 2, incl) == row.per_occurrence[1]);
    CHECK(ewu_total(e, seq, 2, incl) == row.total);
  }
}

TEST_CASE("tightened bound counts only extendable utility at the end") {
  const auto& seq = retail();
  const struct {
    const char* episode;
    Utility compat_total;
    Utility strict_total;
  } rows[] = {
      {"(A)", 21, 21},
      {"(B)", 32, 32},
      {"(C)", 24, 17},  // nothing is ordered after C where it occurs
      {"(D)", 19, 17},
  };
  for (const auto& row : rows) {
    CAPTURE(row.episode);
    auto e = ep(row.episode);
    CHECK(ewu_opt_total(e, seq, 2, incl, RuMode::compat) ==
          row.compat_total);
    CHECK(ewu_opt_total(e, seq, 2, incl, RuMode::strict) ==
          row.strict_total);
  }

  auto b = ep("(B)");
  auto mos = minimal_occurrences(b, seq, 2, incl);
  REQUIRE(mos.size() == 2);
  CHECK(ewu_opt(b, mos[0], seq, 2, incl, RuMode::compat) == 17);
  CHECK(ewu_opt(b, mos[1], seq, 2, incl, RuMode::compat) == 15);
}

TEST_CASE("bounds for a multi-event set") {
  const auto& seq = retail();
  auto bd = ep("(B D)");
  auto mos = minimal_occurrences(bd, seq, 2, incl);
  REQUIRE(mos.size() == 1);
  CHECK(ewu(bd, mos[0], seq, 2, incl) == 21);
  CHECK(ewu_opt(bd, mos[0], seq, 2, incl, RuMode::compat) == 17);
  CHECK(ewu_opt(bd, mos[0], seq, 2, incl, RuMode::strict) == 17);
}

TEST_CASE("episodes without occurrences bound to zero") {
  const auto& seq = retail();
  CHECK(ewu_total(ep("(C)->(B)"), seq, 3, incl) == 0);
  CHECK(ewu_opt_total(ep("(C)->(B)"), seq, 3, incl, RuMode::strict) == 0);
}

TEST_CASE("a single-timestamp sequence shows the tightening") {
  auto seq = ComplexEventSequence::load_native("@EVENT X 2\n1|X:3\n");
  auto x = Episode::single(0);
  auto mos = minimal_occurrences(x, seq, 2, incl);
  REQUIRE(mos.size() == 1);
  // the plain bound double-counts the end timestamp; the tightened one
  // collapses to the exact utility when nothing is extendable
  CHECK(ewu(x, mos[0], seq, 2, incl) == 12);
  CHECK(ewu_opt(x, mos[0], seq, 2, incl, RuMode::strict) == 6);
  CHECK(ewu_opt(x, mos[0], seq, 2, incl, RuMode::compat) == 6);
}

TEST_CASE("bound ordering holds on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto seq = small_random_instance(seed);
    CAPTURE(seed);
    for (auto sem : {MtdSemantics::inclusive, MtdSemantics::exclusive}) {
      for (Timestamp mtd : {1, 3}) {
        auto all = enumerate_all(seq, mtd, sem);
        for (const auto& entry : all.all_episodes) {
          for (const auto& occ : entry.mos) {
            Utility exact = episode_utility_at(entry.episode, occ, seq);
            Utility strict =
                ewu_opt(entry.episode, occ, seq, mtd, sem, RuMode::strict);
            Utility compat =
                ewu_opt(entry.episode, occ, seq, mtd, sem, RuMode::compat);
            Utility plain = ewu(entry.episode, occ, seq, mtd, sem);
            CHECK(exact <= strict);
            CHECK(strict <= compat);
            CHECK(compat <= plain);
          }
        }
      }
    }
  }
}
