#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "aslkit/lattice.hpp"
#include "test_util.hpp"

using namespace aslkit;

namespace {

// Antichains of p by brute force over all subsets.
std::size_t count_antichains(const poset& p) {
  std::size_t count = 0;
  const int n = p.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (((mask >> a) & 1U) && ((mask >> b) & 1U) && p.comparable(a, b)) ok = false;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

poset pentagon() { return parse_poset("elements: z a b c t\ncovers: z<a a<b b<t z<c c<t\n"); }
poset diamond() { return parse_poset("elements: z a b c t\ncovers: z<a z<b z<c a<t b<t c<t\n"); }

}  // namespace

TEST(Lattice, BirkhoffSizes) {
  EXPECT_EQ(birkhoff(chain_poset(4)).size(), 5);
  EXPECT_EQ(birkhoff(antichain_poset(4)).size(), 16);
  // Down-sets of the N poset a<c, b<c, b<d.
  poset n = parse_poset("elements: a b c d\ncovers: a<c b<c b<d\n");
  EXPECT_EQ(birkhoff(n).size(), static_cast<int>(count_antichains(n)));
  EXPECT_TRUE(birkhoff(n).distributive());
  expect_errc(errc::size_cap_exceeded, [] { birkhoff(antichain_poset(6), 32); });
}

TEST(Lattice, BooleanAndDivisor) {
  lattice b3 = boolean(3);
  EXPECT_EQ(b3.size(), 8);
  EXPECT_EQ(rank(b3.order()), 3);
  EXPECT_TRUE(b3.distributive());
  EXPECT_TRUE(is_boolean(b3));

  lattice d = divisor(2, 3);
  EXPECT_EQ(d.size(), 12);
  EXPECT_TRUE(d.distributive());
  EXPECT_FALSE(is_boolean(d));
  EXPECT_EQ(d.order().label(d.top()), "108");
  int six = divisor_element(d, 1, 1);
  EXPECT_EQ(d.order().label(six), "6");
  EXPECT_EQ(d.order().label(d.join(divisor_element(d, 2, 0), divisor_element(d, 0, 3))), "108");
  EXPECT_EQ(d.order().label(d.meet(divisor_element(d, 2, 1), divisor_element(d, 1, 3))), "6");
  EXPECT_TRUE(is_boolean(divisor(1, 1)));
}

TEST(Lattice, NonDistributive) {
  EXPECT_FALSE(lattice::from_poset(pentagon()).distributive());
  EXPECT_FALSE(lattice::from_poset(diamond()).distributive());
  EXPECT_FALSE(is_distributive_type(pentagon()));
  expect_errc(errc::not_a_lattice, [] { lattice::from_poset(antichain_poset(2)); });
  // Two atoms below two coatoms, no join for the atoms.
  expect_errc(errc::not_a_lattice,
              [] { lattice::from_poset(parse_poset("elements: z a b c d t\ncovers: z<a z<b a<c a<d b<c b<d c<t d<t\n")); });
}

TEST(Lattice, DistributiveType) {
  EXPECT_TRUE(is_distributive_type(dist9()));
  EXPECT_TRUE(is_distributive_type(chordal18()));
  EXPECT_TRUE(is_distributive_type(chain_poset(3)));
  EXPECT_FALSE(is_distributive_type(antichain_poset(2)));
  // B_3 without its top.
  lattice b3 = boolean(3);
  std::vector<int> keep;
  for (int x = 0; x < b3.size(); ++x) {
    if (x != b3.top()) keep.push_back(x);
  }
  EXPECT_TRUE(is_distributive_type(b3.order().induced(keep)));
  // A lower interval that is a pentagon.
  EXPECT_FALSE(is_distributive_type(parse_poset("elements: z a b c t u\ncovers: z<a a<b b<t z<c c<t t<u\n")));
}

TEST(Lattice, DualIdealsMatchAntichains) {
  for (const poset& p : {dist9(), boolean(3).order(), divisor(2, 2).order(), chain_poset(5)}) {
    auto ideals = enumerate_dual_ideals(p);
    EXPECT_EQ(ideals.size(), count_antichains(p));
    for (const auto& i : ideals) {
      EXPECT_EQ(dual_ideal_from_carrier(p, carrier(p, i)), i);
      EXPECT_EQ(generated_ideal(p, i.minimal), i);
    }
  }
}

TEST(Lattice, DualIdealErrors) {
  lattice b2 = boolean(2);
  dyn_bitset down(4);
  down.set(static_cast<std::size_t>(b2.bottom()));
  expect_errc(errc::ideal_not_upward_closed, [&] { dual_ideal_from_carrier(b2.order(), down); });
  expect_errc(errc::bad_arguments, [&] { parse_dual_ideal(b2.order(), {"{}", "{1}"}); });
  expect_errc(errc::unknown_label, [&] { parse_dual_ideal(b2.order(), {"{7}"}); });
}

TEST(Lattice, RankFixed) {
  lattice b3 = boolean(3);
  auto i = rank_fixed_ideal(b3.order(), 2);
  EXPECT_EQ(i.minimal.size(), 3U);
  EXPECT_TRUE(is_rank_fixed(b3, i));
  EXPECT_TRUE(is_rank_fixed(b3, dual_ideal{}));
  EXPECT_FALSE(is_rank_fixed(b3, parse_dual_ideal(b3.order(), {"{1,2}"})));
  auto comp = remove_dual_ideal(b3, i);
  EXPECT_EQ(comp.result.size(), 4);
  EXPECT_FALSE(comp.empty);
  EXPECT_TRUE(remove_dual_ideal(b3, rank_fixed_ideal(b3.order(), 0)).empty);
}

TEST(Lattice, ComplementAtAnElement) {
  lattice b3 = boolean(3);
  poset la = sub_l_a(b3, b3.order().index_of("{1}"));
  EXPECT_EQ(la.size(), 4);
  EXPECT_TRUE(is_boolean(lattice::from_poset(la)));
}

TEST(Lattice, DivisorReduction) {
  // min(I) = {6} in divisors of 36: not rank-fixed and no pure power to strip.
  auto r = reduce_divisor_ideal(2, 2, {{1, 1}});
  EXPECT_FALSE(r.rank_fixed);
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 2);

  // min(I) = {4, 3}: strip 4 then 3, leaving the empty ideal of divisor(1, 0).
  auto s = reduce_divisor_ideal(2, 2, {{2, 0}, {0, 1}});
  EXPECT_TRUE(s.rank_fixed);
  EXPECT_EQ(s.n, 1);
  EXPECT_EQ(s.m, 0);
  EXPECT_TRUE(s.minimal.empty());

  EXPECT_TRUE(reduce_divisor_ideal(2, 2, {{2, 0}, {1, 1}, {0, 2}}).rank_fixed);
  expect_errc(errc::bad_arguments, [] { reduce_divisor_ideal(2, 2, {{0, 0}}); });

  lattice d = divisor(2, 2);
  auto i = parse_dual_ideal(d.order(), {"6"});
  EXPECT_FALSE(reduce_divisor_ideal(d, i).rank_fixed);
}

TEST(Lattice, ApicesAndSimple) {
  lattice c = lattice::from_poset(chain_poset(4));
  EXPECT_EQ(apices(c).size(), 2U);
  EXPECT_FALSE(is_simple(c));
  EXPECT_TRUE(is_simple(boolean(2)));
  EXPECT_TRUE(is_simple(divisor(2, 2)));
  // A point glued onto the top of B_2 makes the old top an apex.
  lattice b2top = lattice::from_poset(parse_poset("elements: z a b t u\ncovers: z<a z<b a<t b<t t<u\n"));
  ASSERT_EQ(apices(b2top).size(), 1U);
  EXPECT_EQ(b2top.order().label(apices(b2top).front()), "t");
}

TEST(Lattice, SerializationRoundTrip) {
  lattice d = divisor(1, 2);
  std::string text = serialize(d);
  EXPECT_EQ(text.rfind("kind: divisor 1 2\n", 0), 0U);
  poset back = parse_poset(text);
  EXPECT_EQ(back, d.order());
  EXPECT_EQ(serialize(d.order(), parse_dual_ideal(d.order(), {"2", "9"})), "minimal: 2 9\n");
}
