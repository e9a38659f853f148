#include <gtest/gtest.h>

#include <bit>

#include "packdens/bounds.hpp"
#include "packdens/greedy.hpp"
#include "packdens/oracle.hpp"
#include "packdens/survey.hpp"
#include "test_support.hpp"

namespace packdens {
namespace {

TEST(BuildAutomaton, TwoPointSet) {
  const ShiftAutomaton g = build_automaton(IntSet{0, 1});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.windows[0], 0u);
  EXPECT_EQ(g.windows[1], 1u);
  EXPECT_EQ(g.next[0][0], 0);
  EXPECT_EQ(g.next[0][1], 1);
  EXPECT_EQ(g.next[1][0], 0);
  EXPECT_EQ(g.next[1][1], ShiftAutomaton::kNoEdge);
}

TEST(BuildAutomaton, PerfectRulerHasOneBitWindows) {
  const ShiftAutomaton g = build_automaton(IntSet{0, 1, 4, 6});
  EXPECT_EQ(g.size(), 7u);
  for (auto w : g.windows) EXPECT_LE(std::popcount(w), 1);
}

TEST(BuildAutomaton, Preconditions) {
  EXPECT_THROW(build_automaton(IntSet{0}), std::invalid_argument);
  OracleOptions narrow;
  narrow.width_cap = 8;
  try {
    build_automaton(IntSet{0, 9}, narrow);
    FAIL() << "expected width cap error";
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()), "diam(S) = 9 exceeds automaton width cap 8");
  }
}

TEST(BuildAutomaton, StatesAreConsistentAndAlwaysExtendable) {
  for (int i = 0; i < 100; ++i) {
    const IntSet s = testing::random_normalized(5, 1 + i % 12);
    const DiffSet d = diff_set(s);
    const ShiftAutomaton g = build_automaton(s);
    EXPECT_LE(g.size(), std::size_t{1} << d.diam());
    for (std::size_t u = 0; u < g.size(); ++u) {
      EXPECT_NE(g.next[u][0], ShiftAutomaton::kNoEdge);
      std::vector<std::int64_t> ones;
      for (int b = g.width - 1; b >= 0; --b) {
        if ((g.windows[u] >> b) & 1U) ones.push_back(-b);
      }
      EXPECT_TRUE(is_packing(ones, d)) << s << " window " << g.windows[u];
    }
  }
}

TEST(MaxMeanCycle, Examples) {
  const DensityResult ruler = max_mean_cycle(build_automaton(IntSet{0, 1, 4, 6}));
  EXPECT_EQ(ruler.density, Rational(1, 7));
  EXPECT_EQ(ruler.pattern_string(), "1000000");
  EXPECT_EQ(ruler.witness_period, 7);
  EXPECT_EQ(ruler.witness_cycle.size(), 7u);
  EXPECT_EQ(ruler.states, 7u);

  const DensityResult pair = max_mean_cycle(build_automaton(IntSet{0, 1}));
  EXPECT_EQ(pair.density, Rational(1, 2));
  EXPECT_EQ(pair.pattern_string(), "10");
}

TEST(MaxMeanCycle, OnlyTheEmptySelfLoop) {
  ShiftAutomaton g;
  g.width = 1;
  g.windows = {0};
  g.next = {{0, ShiftAutomaton::kNoEdge}};
  const DensityResult r = max_mean_cycle(g);
  EXPECT_EQ(r.density, Rational(0, 1));
  EXPECT_EQ(r.pattern_string(), "0");
}

TEST(MaxMeanCycle, RejectsDeadEnds) {
  ShiftAutomaton g;
  g.width = 1;
  g.windows = {0, 1};
  g.next = {{0, 1}, {ShiftAutomaton::kNoEdge, ShiftAutomaton::kNoEdge}};
  EXPECT_THROW(max_mean_cycle(g), std::invalid_argument);
}

// Expected values come from an independent enumeration of all periodic
// patterns with period <= 14 (written outside this code base).
TEST(ExactPackingDensity, FrozenValues) {
  const std::vector<std::pair<IntSet, Rational>> cases{
      {IntSet{0, 1, 4, 6}, Rational(1, 7)}, {IntSet{0, 1, 3}, Rational(1, 4)},
      {IntSet{0, 4, 5}, Rational(1, 3)},    {IntSet{0, 2, 7}, Rational(1, 3)},
      {IntSet{0, 1}, Rational(1, 2)},       {IntSet{0, 2}, Rational(1, 2)},
      {IntSet{0, 1, 3, 7}, Rational(1, 5)}, {IntSet{0, 12}, Rational(1, 2)},
      {IntSet{0, 1, 2}, Rational(1, 3)},    {IntSet{0, 1, 4}, Rational(2, 7)},
      {IntSet{0, 2, 4}, Rational(1, 3)},    {IntSet{0, 2, 8, 12}, Rational(1, 7)},
  };
  for (const auto& [s, expected] : cases) {
    EXPECT_EQ(exact_packing_density(s).density, expected) << s;
  }
}

TEST(ExactPackingDensity, SingletonAndTranslatedInput) {
  EXPECT_EQ(exact_packing_density(IntSet{5}).density, Rational(1, 1));
  const DensityResult r = exact_packing_density(IntSet{10, 11, 14, 16});
  EXPECT_EQ(r.density, Rational(1, 7));
  EXPECT_EQ(r.witness_period, 7);
}

TEST(ExactPackingDensity, WitnessTilingPacks) {
  for (int i = 0; i < 150; ++i) {
    const IntSet s = testing::random_normalized(6, 1 + i % 12);
    const DensityResult r = exact_packing_density(s);
    EXPECT_TRUE(periodic_pattern_is_packing(r.witness_pattern, diff_set(s))) << s;
    const auto ones = std::count(r.witness_pattern.begin(), r.witness_pattern.end(), true);
    EXPECT_EQ(r.density, Rational(static_cast<std::uint64_t>(ones), r.witness_pattern.size()));
    EXPECT_LE(r.density.denominator(), r.states);
  }
}

TEST(PeriodicPatternIsPacking, SeesDifferencesBeyondThreeTiles) {
  EXPECT_FALSE(periodic_pattern_is_packing({true}, diff_set(IntSet{0, 10})));
  EXPECT_TRUE(periodic_pattern_is_packing({true, false, false}, diff_set(IntSet{0, 4, 5})));
  EXPECT_FALSE(periodic_pattern_is_packing({true, false}, diff_set(IntSet{0, 12})));
}

TEST(BruteForcePeriodic, Examples) {
  EXPECT_EQ(brute_force_periodic(IntSet{0, 1, 4, 6}, 10), Rational(1, 7));
  EXPECT_EQ(brute_force_periodic(IntSet{0, 1}, 6), Rational(1, 2));
  EXPECT_EQ(brute_force_periodic(IntSet{0, 4, 5}, 12), Rational(1, 3));
  EXPECT_THROW(brute_force_periodic(IntSet{0, 1}, 21), std::invalid_argument);
  EXPECT_THROW(brute_force_periodic(IntSet{0, 1}, 0), std::invalid_argument);
}

TEST(BruteForcePeriodic, GrowsWithPeriodAndStaysBelowExact) {
  for (int i = 0; i < 60; ++i) {
    const IntSet s = testing::random_normalized(5, 1 + i % 9);
    const Rational exact = exact_packing_density(s).density;
    Rational previous(0, 1);
    for (int p = 1; p <= 12; ++p) {
      const Rational brute = brute_force_periodic(s, p);
      EXPECT_LE(previous, brute) << s << " period " << p;
      EXPECT_LE(brute, exact) << s << " period " << p;
      previous = brute;
    }
  }
}

TEST(BruteForcePeriodic, CanMissOptimaWithLongPeriods) {
  EXPECT_EQ(exact_packing_density(IntSet{0, 8}).density, Rational(1, 2));
  EXPECT_EQ(exact_packing_density(IntSet{0, 8}).witness_period, 16);
  EXPECT_EQ(brute_force_periodic(IntSet{0, 8}, 12), Rational(5, 11));
}

TEST(OracleProperties, Sandwich) {
  for (int k = 2; k <= 5; ++k) {
    for (const IntSet& s : enumerate_normalized_sets(k, 9)) {
      const Rational exact = exact_packing_density(s).density;
      const Rational brute = brute_force_periodic(s, 12);
      EXPECT_LE(lower_bound(s), greedy_density(s)) << s;
      EXPECT_LE(greedy_density(s), exact) << s;
      EXPECT_LE(brute, exact) << s;
      EXPECT_LE(exact, upper_bound(s)) << s;
    }
  }
}

TEST(OracleProperties, ScalingLeavesDensityUnchanged) {
  for (int i = 0; i < 60; ++i) {
    const IntSet s = testing::random_normalized(5, 1 + i % 5);
    const Rational base = exact_packing_density(s).density;
    for (std::int64_t k : {2, 3}) {
      std::vector<std::int64_t> scaled;
      for (auto x : s) scaled.push_back(k * x);
      EXPECT_EQ(exact_packing_density(IntSet(scaled)).density, base) << s << " x" << k;
    }
  }
}

TEST(OracleProperties, SupersetsPackNoBetter) {
  for (int i = 0; i < 60; ++i) {
    std::vector<std::int64_t> elems{0};
    Rational previous(1, 1);
    std::uniform_int_distribution<std::int64_t> pick(1, 14);
    for (int step = 0; step < 5; ++step) {
      elems.push_back(pick(testing::rng()));
      const Rational current = exact_packing_density(IntSet(elems)).density;
      EXPECT_LE(current, previous) << IntSet(elems);
      previous = current;
    }
  }
}

TEST(ExactDensity, SparseWideSetWithManyOptimalCycles) {
  const DensityResult r = exact_packing_density(IntSet{0, 16});
  EXPECT_EQ(r.density, Rational(1, 2));
  EXPECT_EQ(r.witness_period, 32);
  EXPECT_EQ(r.pattern_string(), std::string(16, '1') + std::string(16, '0'));
  EXPECT_EQ(r.states, 65536u);
}

}  // namespace
}  // namespace packdens
