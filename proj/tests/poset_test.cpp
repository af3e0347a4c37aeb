#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "aslkit/enumerate.hpp"
#include "aslkit/poset.hpp"
#include "test_util.hpp"

using namespace aslkit;

namespace {

// Brute-force isomorphism classes: every strict order on n labelled points,
// reduced to the lexicographically least relation matrix over all
// permutations.
std::size_t brute_force_classes(int n) {
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> idx;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) idx.emplace_back(a, b);
    }
  }
  std::set<std::uint32_t> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    auto rel = [&](int a, int b) {
      if (a == b) return false;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] == std::make_pair(a, b)) return ((mask >> k) & 1U) != 0;
      }
      return false;
    };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (rel(a, b) && rel(b, a)) ok = false;
        for (int c = 0; c < n && ok; ++c) {
          if (rel(a, b) && rel(b, c) && !rel(a, c)) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
      std::uint32_t code = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (rel(perm[static_cast<std::size_t>(idx[k].first)], perm[static_cast<std::size_t>(idx[k].second)])) {
          code |= 1U << k;
        }
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace

TEST(Poset, ParsesTextFormat) {
  poset p = parse_poset("elements: x0 x1 x2\ncovers: x0<x1 x0<x2\n");
  EXPECT_EQ(p.size(), 3);
  EXPECT_TRUE(p.leq(p.index_of("x0"), p.index_of("x2")));
  EXPECT_FALSE(p.comparable(p.index_of("x1"), p.index_of("x2")));
  EXPECT_EQ(p.bottom(), p.index_of("x0"));
  EXPECT_EQ(p.top(), -1);
  EXPECT_EQ(serialize(parse_poset(serialize(p))), serialize(p));
}

TEST(Poset, RedundantCoversAreDropped) {
  poset p = parse_poset("elements: a b c\ncovers: a<b b<c a<c\n");
  EXPECT_EQ(p.covers().size(), 2U);
  EXPECT_TRUE(p.leq(p.index_of("a"), p.index_of("c")));
}

TEST(Poset, RejectsBadInput) {
  expect_errc(errc::cycle_detected, [] { parse_poset("elements: a b\ncovers: a<b b<a\n"); });
  expect_errc(errc::duplicate_label, [] { parse_poset("elements: a a\n"); });
  expect_errc(errc::unknown_label, [] { parse_poset("elements: a b\ncovers: a<c\n"); });
}

TEST(Poset, Ranks) {
  poset f1 = dist9();
  EXPECT_EQ(rank_of(f1, "x0"), 0);
  EXPECT_EQ(rank_of(f1, "x4"), 2);
  EXPECT_EQ(rank_of(f1, "x8"), 3);
  EXPECT_EQ(rank(f1), 3);
  EXPECT_TRUE(is_pure(f1));
  EXPECT_EQ(rank(chain_poset(5)), 4);
  expect_errc(errc::empty_poset, [] { rank(poset{}); });
  // a < b < c together with a < d: maximal chains of lengths 2 and 1.
  EXPECT_FALSE(is_pure(parse_poset("elements: a b c d\ncovers: a<b b<c a<d\n")));
}

TEST(Poset, Intervals) {
  poset f1 = dist9();
  poset iv = interval(f1, "x0", "x6");
  // x6 lies above x3 and x4, hence above x0, x1 and x2.
  EXPECT_EQ(iv.size(), 6);
  EXPECT_EQ(interval(f1, "x4", "x4").size(), 1);
  expect_errc(errc::not_comparable, [&] { interval(f1, "x1", "x2"); });
}

TEST(Poset, SumOfAntichains) {
  EXPECT_TRUE(is_sum_of_antichains(antichain_poset(3)));
  EXPECT_TRUE(is_sum_of_antichains(chain_poset(4)));
  // Two points below two points, all four relations.
  EXPECT_TRUE(is_sum_of_antichains(parse_poset("elements: a b c d\ncovers: a<c a<d b<c b<d\n")));
  // A two-element chain beside a point.
  EXPECT_FALSE(is_sum_of_antichains(parse_poset("elements: p1 p2 q1\ncovers: p1<p2\n")));
  // N-shaped poset is pure but not an ordinal sum.
  EXPECT_FALSE(is_sum_of_antichains(parse_poset("elements: a b c d\ncovers: a<c b<c b<d\n")));
}

TEST(Poset, ClutterTestsAgreeOnAllSmallPosets) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const bool a = clutter_two_element_test(p);
      EXPECT_EQ(a, clutter_rank_test(p));
      EXPECT_EQ(a, clutter_ordinal_sum_test(p));
      if (a) {
        EXPECT_TRUE(is_pure(p));
      }
    }
  }
}

TEST(Poset, ComparabilityGraph) {
  poset f1 = dist9();
  auto g = comparability_graph(f1);
  EXPECT_EQ(g.size(), 9);
  std::size_t comparable_pairs = 0;
  for (int a = 0; a < f1.size(); ++a) {
    for (int b = a + 1; b < f1.size(); ++b) {
      EXPECT_EQ(g.adjacent(a, b), f1.comparable(a, b));
      comparable_pairs += f1.comparable(a, b) ? 1 : 0;
    }
  }
  EXPECT_EQ(g.edges().size(), comparable_pairs);
}

TEST(Poset, LinearExtensionRespectsOrder) {
  poset f1 = dist9();
  auto ext = linear_extension(f1);
  ASSERT_EQ(ext.size(), 9U);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = i + 1; j < ext.size(); ++j) EXPECT_FALSE(f1.less(ext[j], ext[i]));
  }
  std::vector<std::string> names;
  for (int x : ext) names.push_back(f1.label(x));
  EXPECT_EQ(names, (std::vector<std::string>{"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"}));
}

TEST(Poset, MaximalChains) {
  auto chains = maximal_chains(dist9());
  // x0-x1-x3-{x6,x7}, x0-{x1,x2}-x4-{x6,x7,x8}, x0-x2-x5-x8.
  EXPECT_EQ(chains.size(), 2U + 6U + 1U);
}

TEST(Enumerate, KnownCounts) {
  const std::vector<std::size_t> counts{1, 2, 5, 16, 63, 318, 2045};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_posets(n).size(), counts[static_cast<std::size_t>(n - 1)]);
  expect_errc(errc::size_cap_exceeded, [] { enumerate_posets(8); });
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_posets(n).size(), brute_force_classes(n)) << "n=" << n;
}

TEST(Enumerate, CanonicalCodeIsAnInvariant) {
  poset a = parse_poset("elements: u v w\ncovers: u<v\n");
  poset b = parse_poset("elements: u v w\ncovers: w<u\n");
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(antichain_poset(2)), canonical_code(antichain_poset(3)));
  std::set<std::uint64_t> codes;
  for (const auto& p : enumerate_posets(5)) codes.insert(canonical_code(p));
  EXPECT_EQ(codes.size(), 63U);
}
