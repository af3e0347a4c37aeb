#include <gtest/gtest.h>

#include <vector>

#include "aslkit/complex.hpp"
#include "aslkit/lattice.hpp"
#include "test_util.hpp"

using namespace aslkit;

namespace {

simplicial_complex triangle_boundary() { return parse_facets("1 2\n1 3\n2 3\n"); }
simplicial_complex tetrahedron_boundary() { return parse_facets(fixture_text("tetrahedron_boundary.facets")); }

}  // namespace

TEST(Complex, FacetsAreMaximal) {
  auto c = simplicial_complex::from_index_facets({{0, 1, 2}, {0, 1}, {3}});
  EXPECT_EQ(c.facets().size(), 2U);
  EXPECT_EQ(c.dim(), 2);
  EXPECT_FALSE(c.is_pure());
  EXPECT_TRUE(c.contains(vertex_set::of(std::vector<int>{1, 2})));
  EXPECT_FALSE(c.contains(vertex_set::of(std::vector<int>{2, 3})));
  EXPECT_EQ(c.num_vertices(), 4);
  expect_errc(errc::bad_arguments, [] { simplicial_complex::from_facets({"a"}, {}); });
}

TEST(Complex, FVectorsAndHVectors) {
  auto t = compute_fh(triangle_boundary());
  EXPECT_EQ(t.f, (std::vector<long long>{3, 3}));
  EXPECT_EQ(t.h, (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(t.euler, -1);

  auto s = compute_fh(tetrahedron_boundary());
  EXPECT_EQ(s.f, (std::vector<long long>{4, 6, 4}));
  EXPECT_EQ(s.h, (std::vector<long long>{1, 1, 1, 1}));
  EXPECT_EQ(s.euler, 1);

  // A full simplex has h = (1, 0, ..., 0).
  auto x = compute_fh(simplicial_complex::from_index_facets({{0, 1, 2, 3}}));
  EXPECT_EQ(x.h, (std::vector<long long>{1, 0, 0, 0, 0}));
  EXPECT_EQ(x.euler, 0);
}

TEST(Complex, HVectorSumsToTopFaceCount) {
  // Sum of h equals f_{d-1} for every complex.
  for (const auto& c : {triangle_boundary(), tetrahedron_boundary(), order_complex(dist9()),
                        order_complex(boolean(3).order())}) {
    auto fh = compute_fh(c);
    long long sum = 0;
    for (auto v : fh.h) sum += v;
    EXPECT_EQ(sum, fh.f.back());
  }
}

TEST(Complex, LinkDeletionRestriction) {
  auto s = tetrahedron_boundary();
  auto lk = link(s, vertex_set::singleton(0));
  EXPECT_EQ(lk.facets().size(), 3U);
  EXPECT_EQ(lk.dim(), 1);
  EXPECT_EQ(compute_fh(lk).h, (std::vector<long long>{1, 1, 1}));

  auto del = deletion(s, 0);
  EXPECT_TRUE(del.is_simplex());
  EXPECT_EQ(del.dim(), 2);

  auto edge = link(s, vertex_set::of(std::vector<int>{0, 1}));
  EXPECT_EQ(edge.facets().size(), 2U);
  EXPECT_EQ(edge.dim(), 0);

  expect_errc(errc::face_not_in_complex, [] {
    link(simplicial_complex::from_index_facets({{0, 1}, {1, 2}}), vertex_set::of(std::vector<int>{0, 2}));
  });

  auto r = restriction(s, vertex_set::of(std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(r.is_simplex());
  EXPECT_TRUE(deletion(simplicial_complex::from_index_facets({{0}}), 0).is_empty_face_only());
}

TEST(Complex, OrderComplex) {
  auto c = order_complex(boolean(2).order());
  EXPECT_EQ(c.facets().size(), 2U);
  EXPECT_EQ(c.dim(), 2);
  // Bottom and top lie on every maximal chain.
  EXPECT_EQ(c.cone_points().size(), 2);
  EXPECT_EQ(order_complex(dist9()).facets().size(), 9U);
  expect_errc(errc::empty_poset, [] { order_complex(poset{}); });
}

TEST(Complex, FacePoset) {
  poset p = face_poset(triangle_boundary());
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(rank(p), 2);
  EXPECT_TRUE(is_distributive_type(p));
  EXPECT_EQ(p.label(p.bottom()), "{}");
  EXPECT_EQ(face_poset(tetrahedron_boundary()).size(), 15);
}

TEST(Complex, BarycentricSubdivision) {
  auto sd = barycentric_subdivision(triangle_boundary());
  EXPECT_EQ(sd.num_vertices(), 6);
  EXPECT_EQ(sd.facets().size(), 6U);
  EXPECT_EQ(compute_fh(sd).h, (std::vector<long long>{1, 4, 1}));
  // Subdivision of the 2-simplex: 7 vertices, 6 triangles.
  auto sd2 = barycentric_subdivision(simplicial_complex::from_index_facets({{0, 1, 2}}));
  EXPECT_EQ(sd2.num_vertices(), 7);
  EXPECT_EQ(sd2.facets().size(), 6U);
  expect_errc(errc::bad_arguments, [] { barycentric_subdivision(simplicial_complex{}); });
}

TEST(Complex, SkeletonComplex) {
  auto c = skeleton_complex(3, {1, 2, 3});
  EXPECT_EQ(c.facets().size(), 3U);
  EXPECT_EQ(compute_fh(c).h, (std::vector<long long>{1, 1, 1}));
  EXPECT_TRUE(skeleton_complex(4, {2}).is_simplex());
  auto two = skeleton_complex(4, {1, 2});
  EXPECT_EQ(two.facets().size(), 2U);
  EXPECT_EQ(two.cone_points().size(), 2);
  expect_errc(errc::bad_arguments, [] { skeleton_complex(4, {}); });
  expect_errc(errc::bad_arguments, [] { skeleton_complex(4, {5}); });
}

TEST(Complex, ParseAndSerialize) {
  auto c = parse_facets("# comment\nvertices: a b c d\na b\nb c\n");
  EXPECT_EQ(c.universe_size(), 4);
  EXPECT_EQ(c.num_vertices(), 3);
  auto back = parse_facets(serialize(c));
  EXPECT_EQ(back.universe(), c.universe());
  EXPECT_EQ(back.facets(), c.facets());
  EXPECT_TRUE(parse_facets("{}\n").is_empty_face_only());
  expect_errc(errc::parse_error, [] { parse_facets("# nothing\n"); });
  expect_errc(errc::unknown_label, [] { parse_facets("vertices: a\na b\n"); });
}

TEST(Complex, CanonicalKeyIgnoresLabels) {
  auto a = simplicial_complex::from_index_facets({{0, 1}, {1, 2}});
  auto b = simplicial_complex::from_index_facets({{2, 0}, {0, 1}});
  auto c = simplicial_complex::from_index_facets({{0, 1, 2}});
  EXPECT_EQ(canonical_key(a).size(), canonical_key(b).size());
  EXPECT_NE(canonical_key(a), canonical_key(c));
}
