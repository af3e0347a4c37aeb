#include <gtest/gtest.h>

#include <vector>

#include "aslkit/lattice.hpp"
#include "aslkit/straightening.hpp"
#include "test_util.hpp"

using namespace aslkit;

namespace {

long long choose(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomials of degree d whose support is a chain, by direct enumeration.
unsigned long long brute_multichains(const poset& p, int d) {
  std::vector<int> cur;
  unsigned long long count = 0;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      for (int a : cur) {
        for (int b : cur) {
          if (!p.comparable(a, b)) return;
        }
      }
      ++count;
      return;
    }
    for (int v = from; v < p.size(); ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

polynomial term(const straightening_ideal& j, const poset& p, const char* a, const char* b, int c) {
  return polynomial(j.product(p.index_of(a), p.index_of(b)), c);
}

}  // namespace

TEST(Straightening, BooleanTwo) {
  lattice b2 = boolean(2);
  const poset& p = b2.order();
  auto j = straightening_generators(p);
  ASSERT_EQ(j.generators.size(), 1U);
  polynomial want = term(j, p, "{1}", "{2}", 1) + term(j, p, "{}", "{1,2}", -1);
  EXPECT_EQ(j.generators.front().f, want);
  EXPECT_EQ(normal_form(term(j, p, "{1}", "{2}", 1), j), term(j, p, "{}", "{1,2}", 1));
}

TEST(Straightening, NineElementGenerator) {
  poset p = dist9();
  auto j = straightening_generators(p);
  const int x2 = p.index_of("x2");
  const int x3 = p.index_of("x3");
  const straightening_generator* g = nullptr;
  for (const auto& gen : j.generators) {
    if ((gen.alpha == x2 && gen.beta == x3) || (gen.alpha == x3 && gen.beta == x2)) g = &gen;
  }
  ASSERT_NE(g, nullptr);
  polynomial want = term(j, p, "x2", "x3", 1) + term(j, p, "x0", "x6", -1) + term(j, p, "x0", "x7", -1);
  EXPECT_EQ(g->f, want);
  // x3 and x5 have no common upper bound.
  for (const auto& gen : j.generators) {
    if ((p.label(gen.alpha) == "x3" && p.label(gen.beta) == "x5")) {
      EXPECT_EQ(gen.f, term(j, p, "x3", "x5", 1));
    }
  }
}

TEST(Straightening, GeneratorCountIsIncomparablePairs) {
  for (const poset& p : {dist9(), chordal18(), boolean(3).order()}) {
    std::size_t pairs = 0;
    for (int a = 0; a < p.size(); ++a) {
      for (int b = a + 1; b < p.size(); ++b) pairs += p.comparable(a, b) ? 0 : 1;
    }
    EXPECT_EQ(straightening_generators(p).generators.size(), pairs);
  }
}

TEST(Straightening, DistributiveLatticesGiveJoinMeetIdeal) {
  for (const auto& l : {boolean(3), divisor(2, 2), divisor(1, 3)}) {
    auto s = straightening_generators(l.order());
    auto h = join_meet_generators(l);
    ASSERT_EQ(s.generators.size(), h.generators.size());
    for (std::size_t k = 0; k < s.generators.size(); ++k) EXPECT_EQ(s.generators[k].f, h.generators[k].f);
  }
}

TEST(Straightening, RejectsOtherPosets) {
  expect_errc(errc::not_distributive_type, [] { straightening_generators(antichain_poset(2)); });
  expect_errc(errc::not_distributive_type,
              [] { straightening_generators(parse_poset("elements: z a b c t\ncovers: z<a a<b b<t z<c c<t\n")); });
  expect_errc(errc::bad_arguments, [] {
    poset c = chain_poset(3);
    straightening_generators(c, {2, 1, 0});
  });
}

TEST(Straightening, GroebnerAndLeastFactor) {
  for (const poset& p : {dist9(), boolean(3).order(), divisor(2, 2).order(), chain_poset(4)}) {
    auto j = straightening_generators(p);
    EXPECT_TRUE(buchberger_check(j));
    EXPECT_TRUE(buchberger_check(j, true));
    EXPECT_TRUE(asl2_check(j));
  }
  auto big = straightening_generators(chordal18());
  expect_errc(errc::size_cap_exceeded, [&] { buchberger_check(big); });
  EXPECT_TRUE(buchberger_check(big, false, chordal18().size()));
}

TEST(Straightening, HilbertFunction) {
  auto b2 = straightening_generators(boolean(2).order());
  EXPECT_EQ(hilbert_function(b2, 0), 1U);
  EXPECT_EQ(hilbert_function(b2, 1), 4U);
  EXPECT_EQ(hilbert_function(b2, 2), 9U);

  for (int n = 1; n <= 5; ++n) {
    auto j = straightening_generators(chain_poset(n));
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(hilbert_function(j, d), static_cast<unsigned long long>(choose(n + d - 1, d))) << n << " " << d;
    }
  }
  expect_errc(errc::size_cap_exceeded, [&] { hilbert_function(b2, 7); });
  expect_errc(errc::bad_arguments, [&] { hilbert_function(b2, -1); });
}

TEST(Straightening, StandardMonomialsAreMultichains) {
  for (const poset& p : {dist9(), boolean(3).order()}) {
    auto j = straightening_generators(p);
    for (int d = 0; d <= 3; ++d) {
      const auto want = brute_multichains(p, d);
      EXPECT_EQ(count_standard_monomials(p, d), want);
      EXPECT_EQ(standard_monomials(j, d).size(), want);
      EXPECT_EQ(hilbert_function(j, d), want);
    }
  }
}

TEST(Straightening, NormalFormsAreStandard) {
  poset p = dist9();
  auto j = straightening_generators(p);
  // x1 x2 x5 is far from standard; its normal form must be supported on chains.
  polynomial f(monomial({j.variable(p.index_of("x1")), j.variable(p.index_of("x2")), j.variable(p.index_of("x5"))}), 1);
  polynomial r = normal_form(f, j);
  for (const auto& [m, c] : r.terms()) {
    (void)c;
    for (int a : m.vars) {
      for (int b : m.vars) EXPECT_TRUE(p.comparable(j.element(a), j.element(b)));
    }
  }
}

TEST(Straightening, InitialComplexIsOrderComplex) {
  for (const poset& p : {dist9(), chordal18(), boolean(3).order()}) {
    auto c = initial_ideal(straightening_generators(p));
    EXPECT_EQ(c.facets().size(), order_complex(p).facets().size());
  }
}
