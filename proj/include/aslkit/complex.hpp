#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace aslkit {

inline constexpr std::size_t default_face_cap = std::size_t{1} << 16;

namespace detail {

inline bool lex_less(const vertex_set& a, const vertex_set& b) {
  auto x = a.elements();
  auto y = b.elements();
  return x < y;
}

inline std::vector<vertex_set> maximal_sets(std::vector<vertex_set> sets) {
  std::sort(sets.begin(), sets.end(), [](const vertex_set& a, const vertex_set& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<vertex_set> out;
  for (const auto& s : sets) {
    bool covered = false;
    for (const auto& t : out) {
      if (s.subset_of(t)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Simplicial complex on an ambient vertex universe, stored by facets.
/// Vertices of the complex proper are the union of its facets; universe
/// vertices outside every facet are non-faces (they matter for face rings).
class simplicial_complex {
 public:
  simplicial_complex() : facets_{vertex_set{}} {}

  static simplicial_complex from_facets(std::vector<std::string> universe, std::vector<vertex_set> facets) {
    if (universe.size() > static_cast<std::size_t>(vertex_set::capacity)) {
      throw error(errc::size_cap_exceeded, "at most 128 vertices");
    }
    if (facets.empty()) throw error(errc::bad_arguments, "the void complex is not supported");
    const auto range = vertex_set::range(static_cast<int>(universe.size()));
    for (const auto& f : facets) {
      if (!f.subset_of(range)) throw error(errc::unknown_label, "facet vertex outside the universe");
    }
    simplicial_complex c;
    c.universe_ = std::move(universe);
    c.facets_ = detail::maximal_sets(std::move(facets));
    return c;
  }

  /// Universe equals the vertices of `facets`, labelled 0..n-1.
  static simplicial_complex from_index_facets(const std::vector<std::vector<int>>& facets) {
    int n = 0;
    std::vector<vertex_set> fs;
    for (const auto& f : facets) {
      for (int v : f) n = std::max(n, v + 1);
      fs.push_back(vertex_set::of(f));
    }
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
    return from_facets(std::move(names), std::move(fs));
  }

  const std::vector<std::string>& universe() const { return universe_; }
  int universe_size() const { return static_cast<int>(universe_.size()); }
  const std::string& label(int v) const { return universe_[static_cast<std::size_t>(v)]; }
  const std::vector<vertex_set>& facets() const { return facets_; }

  vertex_set vertices() const {
    vertex_set s;
    for (const auto& f : facets_) s |= f;
    return s;
  }
  int num_vertices() const { return vertices().size(); }

  int dim() const {
    int d = 0;
    for (const auto& f : facets_) d = std::max(d, f.size());
    return d - 1;
  }

  bool is_pure() const {
    for (const auto& f : facets_) {
      if (f.size() != facets_.front().size()) return false;
    }
    return true;
  }

  bool is_simplex() const { return facets_.size() == 1; }
  /// Only the empty face.
  bool is_empty_face_only() const { return facets_.size() == 1 && facets_.front().empty(); }

  bool contains(const vertex_set& face) const {
    for (const auto& f : facets_) {
      if (face.subset_of(f)) return true;
    }
    return false;
  }

  /// Vertices lying in every facet.
  vertex_set cone_points() const {
    vertex_set s = facets_.front();
    for (const auto& f : facets_) s &= f;
    return s;
  }

  simplicial_complex with_facets(std::vector<vertex_set> fs) const {
    simplicial_complex c;
    c.universe_ = universe_;
    c.facets_ = detail::maximal_sets(std::move(fs));
    return c;
  }

  /// All faces, including the empty face.
  std::vector<vertex_set> faces(std::size_t cap = default_face_cap) const {
    std::unordered_set<vertex_set, vertex_set_hash> seen;
    std::vector<vertex_set> out;
    for (const auto& f : facets_) {
      if (seen.count(f)) continue;
      auto verts = f.elements();
      const std::size_t k = verts.size();
      if (k >= 20) throw error(errc::size_cap_exceeded, "facet too large for face enumeration");
      std::vector<vertex_set> stack{f};
      seen.insert(f);
      out.push_back(f);
      while (!stack.empty()) {
        vertex_set g = stack.back();
        stack.pop_back();
        g.for_each([&](int v) {
          vertex_set h = g;
          h.erase(v);
          if (seen.insert(h).second) {
            out.push_back(h);
            stack.push_back(h);
            if (out.size() > cap) throw error(errc::size_cap_exceeded, "more than " + std::to_string(cap) + " faces");
          }
        });
      }
    }
    std::sort(out.begin(), out.end(), [](const vertex_set& a, const vertex_set& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return detail::lex_less(a, b);
    });
    return out;
  }

  friend bool operator==(const simplicial_complex& a, const simplicial_complex& b) {
    return a.universe_ == b.universe_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<vertex_set> facets_;
};

// ---------------------------------------------------------------------------
// Constructions.

/// Faces are the chains of P.
inline simplicial_complex order_complex(const poset& p) {
  if (p.empty()) throw error(errc::empty_poset, "order complex of the empty poset");
  std::vector<vertex_set> fs;
  for (const auto& ch : maximal_chains(p)) fs.push_back(vertex_set::of(ch));
  return simplicial_complex::from_facets(p.labels(), std::move(fs));
}

inline simplicial_complex link(const simplicial_complex& c, const vertex_set& face) {
  std::vector<vertex_set> fs;
  for (const auto& f : c.facets()) {
    if (face.subset_of(f)) fs.push_back(f - face);
  }
  if (fs.empty()) throw error(errc::face_not_in_complex, "link of a non-face");
  return c.with_facets(std::move(fs));
}

/// Delta - x.  Deleting the only vertex of a simplex leaves {empty face}.
inline simplicial_complex deletion(const simplicial_complex& c, int x) {
  std::vector<vertex_set> fs;
  for (auto f : c.facets()) {
    f.erase(x);
    fs.push_back(f);
  }
  return c.with_facets(std::move(fs));
}

/// Induced subcomplex on W.
inline simplicial_complex restriction(const simplicial_complex& c, const vertex_set& w) {
  std::vector<vertex_set> fs;
  for (const auto& f : c.facets()) fs.push_back(f & w);
  return c.with_facets(std::move(fs));
}

namespace detail {

inline std::string face_label(const simplicial_complex& c, const vertex_set& f) {
  std::string s = "{";
  bool first = true;
  f.for_each([&](int v) {
    if (!first) s += ",";
    s += c.label(v);
    first = false;
  });
  return s + "}";
}

/// Faces ordered by inclusion; `with_empty` decides whether the empty face is kept.
inline poset faces_by_inclusion(const simplicial_complex& c, bool with_empty) {
  auto fs = c.faces();
  if (!with_empty) fs.erase(std::remove_if(fs.begin(), fs.end(), [](const vertex_set& f) { return f.empty(); }), fs.end());
  std::unordered_map<vertex_set, int, vertex_set_hash> index;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    index.emplace(fs[k], static_cast<int>(k));
    names.push_back(face_label(c, fs[k]));
  }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    fs[k].for_each([&](int v) {
      vertex_set g = fs[k];
      g.erase(v);
      auto it = index.find(g);
      if (it != index.end()) covers.emplace_back(it->second, static_cast<int>(k));
    });
  }
  return poset::from_index_covers(std::move(names), covers);
}

}  // namespace detail

/// All faces including the empty one, ordered by inclusion.
inline poset face_poset(const simplicial_complex& c) {
  poset p = detail::faces_by_inclusion(c, true);
  if (!is_distributive_type(p)) throw error(errc::internal_mismatch, "face poset is not of distributive type");
  return p;
}

/// Order complex of the nonempty faces.
inline simplicial_complex barycentric_subdivision(const simplicial_complex& c) {
  if (c.is_empty_face_only()) throw error(errc::bad_arguments, "subdivision of the empty-face complex");
  return order_complex(detail::faces_by_inclusion(c, false));
}

/// Facets are the (n-1)-subsets of [n] not containing X; vertices 1..n.
inline simplicial_complex skeleton_complex(int n, const std::vector<int>& x) {
  if (n < 2 || n > vertex_set::capacity) throw error(errc::bad_arguments, "skeleton complex needs 2 <= n <= 128");
  if (x.empty()) throw error(errc::bad_arguments, "X must be nonempty");
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back(std::to_string(k));
  std::vector<vertex_set> fs;
  for (int k : x) {
    if (k < 1 || k > n) throw error(errc::bad_arguments, "X must be a subset of [n]");
    vertex_set f = vertex_set::range(n);
    f.erase(k - 1);
    fs.push_back(f);
  }
  return simplicial_complex::from_facets(std::move(names), std::move(fs));
}

// ---------------------------------------------------------------------------
// f- and h-vectors.

struct fh_vectors {
  std::vector<long long> f;  // f[i] = number of i-dimensional faces, i = 0..d-1
  std::vector<long long> h;  // h_0..h_d
  long long euler = 0;       // reduced Euler characteristic
};

inline fh_vectors compute_fh(const simplicial_complex& c) {
  const int d = c.dim() + 1;
  std::vector<long long> fm(static_cast<std::size_t>(d + 1), 0);  // fm[i] = f_{i-1}
  for (const auto& face : c.faces()) ++fm[static_cast<std::size_t>(face.size())];
  fh_vectors out;
  out.f.assign(fm.begin() + 1, fm.end());
  out.h.assign(static_cast<std::size_t>(d + 1), 0);
  for (int k = 0; k <= d; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) {
      long long term = detail::binomial(d - i, k - i) * fm[static_cast<std::size_t>(i)];
      s += ((k - i) % 2 == 0) ? term : -term;
    }
    out.h[static_cast<std::size_t>(k)] = s;
  }
  long long e = 0;
  for (int i = 0; i <= d; ++i) e += (i % 2 == 1 ? 1 : -1) * fm[static_cast<std::size_t>(i)];
  out.euler = e;
  return out;
}

// ---------------------------------------------------------------------------
// Facet-list text format: one facet per line; `{}` is the empty facet;
// optional `vertices:` line fixes the universe order.

inline simplicial_complex parse_facets(std::string_view text) {
  std::vector<std::string> universe;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<std::string>> raw;
  bool fixed = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("vertices:", 0) == 0) {
      for (auto& v : detail::split_ws(line.substr(9))) {
        if (!index.emplace(v, static_cast<int>(universe.size())).second) throw error(errc::duplicate_label, v);
        universe.push_back(v);
      }
      fixed = true;
      continue;
    }
    if (line == "{}") {
      raw.emplace_back();
      continue;
    }
    raw.push_back(detail::split_ws(line));
  }
  std::vector<vertex_set> fs;
  for (const auto& f : raw) {
    vertex_set s;
    for (const auto& v : f) {
      auto it = index.find(v);
      if (it == index.end()) {
        if (fixed) throw error(errc::unknown_label, v);
        it = index.emplace(v, static_cast<int>(universe.size())).first;
        universe.push_back(v);
      }
      s.insert(it->second);
    }
    fs.push_back(s);
  }
  if (fs.empty()) throw error(errc::parse_error, "no facets");
  return simplicial_complex::from_facets(std::move(universe), std::move(fs));
}

inline std::string serialize(const simplicial_complex& c) {
  std::string out = "vertices:";
  for (const auto& v : c.universe()) out += " " + v;
  out += "\n";
  for (const auto& f : c.facets()) {
    if (f.empty()) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    f.for_each([&](int v) {
      if (!first) out += " ";
      out += c.label(v);
      first = false;
    });
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Memo keys: sorted facets after relabelling vertices by first occurrence.

using complex_key = std::vector<vertex_set>;

struct complex_key_hash {
  std::size_t operator()(const complex_key& k) const {
    std::size_t h = k.size();
    for (const auto& f : k) h = h * 0x100000001B3ULL ^ f.hash();
    return h;
  }
};

inline complex_key canonical_key(const simplicial_complex& c) {
  std::vector<int> map(static_cast<std::size_t>(vertex_set::capacity), -1);
  int next = 0;
  for (const auto& f : c.facets()) {
    f.for_each([&](int v) {
      if (map[static_cast<std::size_t>(v)] < 0) map[static_cast<std::size_t>(v)] = next++;
    });
  }
  complex_key key;
  key.reserve(c.facets().size());
  for (const auto& f : c.facets()) {
    vertex_set g;
    f.for_each([&](int v) { g.insert(map[static_cast<std::size_t>(v)]); });
    key.push_back(g);
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace aslkit
