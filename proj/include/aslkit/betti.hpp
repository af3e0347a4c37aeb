#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace aslkit {

/// Graded Betti numbers beta_{i,j} of a graded quotient of a polynomial ring
/// in `num_vars` variables.  Only nonzero entries are stored.
struct betti_table {
  int num_vars = 0;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int j, long long v) {
    if (v == 0) return;
    if (v < 0) throw error(errc::internal_mismatch, "negative Betti number");
    entries[{i, j}] += v;
  }

  int pd() const {
    int p = 0;
    for (const auto& [k, v] : entries) p = std::max(p, k.first);
    return p;
  }
  int reg() const {
    int r = 0;
    for (const auto& [k, v] : entries) r = std::max(r, k.second - k.first);
    return r;
  }
  long long total(int i) const {
    long long s = 0;
    for (const auto& [k, v] : entries) {
      if (k.first == i) s += v;
    }
    return s;
  }
  /// Internal degrees carrying column i.
  std::vector<int> degrees(int i) const {
    std::vector<int> out;
    for (const auto& [k, v] : entries) {
      if (k.first == i) out.push_back(k.second);
    }
    return out;
  }

  friend bool operator==(const betti_table&, const betti_table&) = default;
};

/// Entrywise a <= b.
inline bool dominated_by(const betti_table& a, const betti_table& b) {
  for (const auto& [k, v] : a.entries) {
    if (v > b.at(k.first, k.second)) return false;
  }
  return true;
}

inline std::string to_text(const betti_table& t) {
  std::string s = "num_vars " + std::to_string(t.num_vars) + "\n";
  for (const auto& [k, v] : t.entries) {
    s += "beta_" + std::to_string(k.first) + "," + std::to_string(k.second) + " = " + std::to_string(v) + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hochster's formula.

inline constexpr int default_hochster_cap = 16;

/// beta_{i,j}(S/I_Delta) = sum over |W| = j of dim H~_{j-i-1}(Delta|_W).
/// Induced subcomplexes with a cone point are acyclic and skipped.
inline betti_table hochster_betti(const simplicial_complex& c, field_kind field = field_kind::rational,
                                  int cap = default_hochster_cap) {
  const int m = c.universe_size();
  if (m > cap || m > 30) throw error(errc::size_cap_exceeded, "Hochster sum capped at " + std::to_string(cap) + " vertices");
  betti_table t;
  t.num_vars = m;
  const std::uint32_t full = m == 0 ? 0U : ((1U << m) - 1U);
  for (std::uint32_t w = 0;; ++w) {
    vertex_set ws;
    for (int v = 0; v < m; ++v) {
      if ((w >> v) & 1U) ws.insert(v);
    }
    simplicial_complex r = restriction(c, ws);
    if (r.cone_points().empty()) {
      auto h = reduced_homology(r, field);
      const int j = ws.size();
      for (int k = -1; k <= r.dim(); ++k) {
        long long d = h.at(k);
        if (d) t.add(j - k - 1, j, d);
      }
    }
    if (w == full) break;
  }
  return t;
}

struct regularity_result {
  int reg = 0;
  vertex_set witness;  // W with H~_{reg-1}(Delta|_W) != 0
};

/// reg(S/I_Delta) = 1 + max{k : H~_k(Delta|_W) != 0 for some W}.
/// Top-degree homology of an induced subcomplex embeds into that of Delta,
/// so when H~_dim(Delta) = 0 no W reaches k = dim.  Below that, a witness
/// is searched among W = V and V minus a vertex, then exhaustively when
/// there are at most `cap` vertices.
inline regularity_result hochster_regularity(const simplicial_complex& c, field_kind field = field_kind::rational,
                                             int cap = default_hochster_cap) {
  const int m = c.universe_size();
  const int d = c.dim();
  const vertex_set all = vertex_set::range(m);
  auto hom_at = [&](const vertex_set& w, int k) {
    simplicial_complex r = restriction(c, w);
    if (!r.cone_points().empty()) return 0LL;
    return reduced_homology(r, field).at(k);
  };
  std::vector<vertex_set> candidates{all};
  all.for_each([&](int v) {
    vertex_set w = all;
    w.erase(v);
    candidates.push_back(w);
  });
  for (int k = d; k >= 0; --k) {
    if (k == d) {
      if (hom_at(all, d) != 0) return {d + 1, all};
      continue;
    }
    for (const auto& w : candidates) {
      if (hom_at(w, k) != 0) return {k + 1, w};
    }
    if (m > cap) throw error(errc::size_cap_exceeded, "no regularity witness among near-full vertex sets");
    const std::uint32_t full = (m == 0) ? 0U : ((1U << m) - 1U);
    for (std::uint32_t bits = 0;; ++bits) {
      vertex_set w;
      for (int v = 0; v < m; ++v) {
        if ((bits >> v) & 1U) w.insert(v);
      }
      if (hom_at(w, k) != 0) return {k + 1, w};
      if (bits == full) break;
    }
  }
  return {0, vertex_set{}};
}

// ---------------------------------------------------------------------------
// Linear resolutions.

/// Quotient by a quadratic squarefree ideal with linear resolution: every
/// entry beyond beta_{0,0} sits at j = i + 1.  The zero ideal qualifies.
inline bool has_linear_quotient_table(const betti_table& t) {
  for (const auto& [k, v] : t.entries) {
    if (k.first == 0) continue;
    if (k.second != k.first + 1) return false;
  }
  return true;
}

/// Chordality of the comparability graph.
inline bool has_linear_resolution(const poset& p) {
  if (!is_distributive_type(p)) throw error(errc::not_distributive_type, "poset is not of distributive type");
  return is_chordal(comparability_graph(p));
}

/// reg of S/I_{Delta(P)}; for Cohen-Macaulay orders it equals the last
/// nonzero index of the h-vector.
inline int regularity_of_complement(const poset& p, bool cohen_macaulay, field_kind field = field_kind::rational,
                                    int cap = default_hochster_cap) {
  auto c = order_complex(p);
  int reg = hochster_regularity(c, field, cap).reg;
  if (cohen_macaulay) {
    auto h = compute_fh(c).h;
    int last = 0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] != 0) last = static_cast<int>(k);
    }
    if (last != reg) throw error(errc::consistency_failure, "regularity differs from the h-vector degree");
  }
  return reg;
}

}  // namespace aslkit
