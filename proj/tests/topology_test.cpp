#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "aslkit/enumerate.hpp"
#include "aslkit/lattice.hpp"
#include "aslkit/topology.hpp"
#include "test_util.hpp"

using namespace aslkit;

namespace {

simplicial_complex rp2() {
  return simplicial_complex::from_index_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

// Connected on the vertices that appear in some edge.
bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) continue;
    if (root < 0) root = find(v);
    if (find(v) != root) return false;
  }
  return true;
}

int facet_index(const simplicial_complex& c, const std::vector<int>& f) {
  const auto want = vertex_set::of(f);
  for (std::size_t k = 0; k < c.facets().size(); ++k) {
    if (c.facets()[k] == want) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

TEST(Homology, Spheres) {
  auto s1 = simplicial_complex::from_index_facets({{0, 1}, {1, 2}, {0, 2}});
  auto h = reduced_homology(s1);
  EXPECT_EQ(h.at(-1), 0);
  EXPECT_EQ(h.at(0), 0);
  EXPECT_EQ(h.at(1), 1);

  auto s2 = parse_facets(fixture_text("tetrahedron_boundary.facets"));
  EXPECT_EQ(reduced_homology(s2).at(2), 1);
  EXPECT_EQ(reduced_homology(s2).at(1), 0);

  auto two_points = simplicial_complex::from_index_facets({{0}, {1}});
  EXPECT_EQ(reduced_homology(two_points).at(0), 1);

  EXPECT_EQ(reduced_homology(simplicial_complex{}).at(-1), 1);
  EXPECT_TRUE(reduced_homology(simplicial_complex::from_index_facets({{0, 1, 2}})).acyclic());
}

TEST(Homology, ProjectivePlaneDependsOnTheField) {
  auto c = rp2();
  EXPECT_TRUE(reduced_homology(c, field_kind::rational).acyclic());
  auto h2 = reduced_homology(c, field_kind::f2);
  EXPECT_EQ(h2.at(1), 1);
  EXPECT_EQ(h2.at(2), 1);
  EXPECT_TRUE(reduced_homology(c, field_kind::f3).acyclic());

  EXPECT_TRUE(is_cohen_macaulay(c, field_kind::rational));
  EXPECT_TRUE(is_cohen_macaulay(c, field_kind::f3));
  EXPECT_FALSE(is_cohen_macaulay(c, field_kind::f2));
}

TEST(Topology, GraphsCmShellableVdIffConnected) {
  const int n = 5;
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  int checked = 0;
  for (unsigned mask = 1; mask < (1U << all.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<int>> fs;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1U) {
        es.push_back(all[k]);
        fs.push_back({all[k].first, all[k].second});
      }
    }
    auto c = simplicial_complex::from_index_facets(fs);
    const bool conn = connected(n, es);
    EXPECT_EQ(is_cohen_macaulay(c), conn);
    EXPECT_EQ(is_shellable(c), from_bool(conn));
    EXPECT_EQ(is_vertex_decomposable(c), from_bool(conn));
    ++checked;
  }
  EXPECT_EQ(checked, 1023);
}

TEST(Topology, GluedTriangles) {
  // Two solid triangles sharing a vertex: the link of that vertex is two
  // disjoint edges.
  auto solid = simplicial_complex::from_index_facets({{0, 1, 2}, {0, 3, 4}});
  EXPECT_FALSE(is_cohen_macaulay(solid));
  EXPECT_EQ(is_shellable(solid), verdict::no);
  EXPECT_EQ(is_vertex_decomposable(solid), verdict::no);
  // Sharing an edge instead gives a ball.
  auto ball = simplicial_complex::from_index_facets({{0, 1, 2}, {0, 1, 3}});
  EXPECT_TRUE(is_cohen_macaulay(ball));
  EXPECT_EQ(is_shellable(ball), verdict::yes);
  EXPECT_EQ(is_vertex_decomposable(ball), verdict::yes);
  // Hollow triangles sharing a vertex form a connected graph.
  auto hollow = simplicial_complex::from_index_facets({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  EXPECT_TRUE(is_cohen_macaulay(hollow));
  EXPECT_EQ(is_shellable(hollow), verdict::yes);
}

TEST(Topology, NonPureIsRejected) {
  auto c = simplicial_complex::from_index_facets({{0, 1, 2}, {2, 3}});
  EXPECT_FALSE(is_cohen_macaulay(c));
  EXPECT_EQ(is_shellable(c), verdict::no);
  EXPECT_EQ(is_vertex_decomposable(c), verdict::no);
}

TEST(Topology, ShellingOrders) {
  auto s2 = parse_facets(fixture_text("tetrahedron_boundary.facets"));
  auto res = find_shelling(s2);
  ASSERT_EQ(res.answer, verdict::yes);
  EXPECT_TRUE(is_shelling_order(s2, res.order));

  // B_3 without bottom and top: the order complex is a hexagon.
  lattice b3 = boolean(3);
  std::vector<int> mid;
  for (int x = 0; x < b3.size(); ++x) {
    if (x != b3.bottom() && x != b3.top()) mid.push_back(x);
  }
  auto hex = order_complex(b3.order().induced(mid));
  ASSERT_EQ(hex.facets().size(), 6U);
  auto hres = find_shelling(hex);
  ASSERT_EQ(hres.answer, verdict::yes);
  EXPECT_TRUE(is_shelling_order(hex, hres.order));

  auto path = simplicial_complex::from_index_facets({{0, 1}, {1, 2}, {2, 3}});
  auto at = [&](int a, int b) { return facet_index(path, {a, b}); };
  std::vector<int> bad{at(0, 1), at(2, 3), at(1, 2)};
  std::vector<int> good{at(0, 1), at(1, 2), at(2, 3)};
  EXPECT_FALSE(is_shelling_order(path, bad));
  EXPECT_TRUE(is_shelling_order(path, good));
}

TEST(Topology, BudgetGivesInconclusive) {
  auto s2 = parse_facets(fixture_text("tetrahedron_boundary.facets"));
  search_options tiny;
  tiny.facet_cap = 2;
  EXPECT_EQ(is_vertex_decomposable(s2, tiny), verdict::inconclusive);
  EXPECT_EQ(is_shellable(s2, tiny), verdict::inconclusive);
  EXPECT_EQ(is_vertex_decomposable(s2), verdict::yes);
}

TEST(Topology, LadderOnSmallPosets) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      auto c = order_complex(p);
      ladder_record r{is_vertex_decomposable(c), is_shellable(c), is_cohen_macaulay(c), c.is_pure()};
      EXPECT_TRUE(ladder_consistent(r)) << serialize(p);
      EXPECT_EQ(r.pure, is_pure(p));
    }
  }
}

TEST(Topology, DistributiveLatticesAreShellable) {
  for (const auto& l : {boolean(3), divisor(2, 2), birkhoff(parse_poset("elements: a b c d\ncovers: a<c b<c b<d\n"))}) {
    EXPECT_TRUE(is_cm_poset(l.order()));
    EXPECT_EQ(is_shellable_poset(l.order()), verdict::yes);
  }
  EXPECT_TRUE(is_cm_poset(dist9()));
  // Two chains glued at the bottom, of lengths 2 and 1.
  EXPECT_FALSE(is_cm_poset(parse_poset("elements: a b c d\ncovers: a<b b<c a<d\n")));
  expect_errc(errc::empty_poset, [] { is_cm_poset(poset{}); });
}

TEST(Topology, LadderConsistency) {
  EXPECT_TRUE(ladder_consistent({verdict::yes, verdict::yes, true, true}));
  EXPECT_TRUE(ladder_consistent({verdict::inconclusive, verdict::inconclusive, false, false}));
  EXPECT_FALSE(ladder_consistent({verdict::yes, verdict::no, true, true}));
  EXPECT_FALSE(ladder_consistent({verdict::no, verdict::yes, false, true}));
  EXPECT_FALSE(ladder_consistent({verdict::no, verdict::no, true, false}));
}
