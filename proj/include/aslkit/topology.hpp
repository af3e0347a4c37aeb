#pragma once

// Decision procedures on simplicial complexes: Reisner's criterion,
// shellability search and vertex decomposability, plus poset wrappers over
// the order complex.

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bits.hpp"
#include "budget.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "poset.hpp"

namespace aslkit {

// ---------------------------------------------------------------------------
// Cohen-Macaulay.

namespace detail {

/// Removes every cone point.
inline simplicial_complex strip_cone(const simplicial_complex& c) {
  vertex_set cone = c.cone_points();
  return cone.empty() ? c : link(c, cone);
}

class cm_search {
 public:
  explicit cm_search(field_kind f) : field_(f) {}

  bool run(const simplicial_complex& c) {
    if (!c.is_pure()) return false;
    simplicial_complex base = strip_cone(c);
    if (base.is_empty_face_only() || base.dim() == 0) return true;
    auto key = canonical_key(base);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = homology_below_top_vanishes(base, field_);
    if (ok) {
      base.vertices().for_each([&](int v) {
        if (ok) ok = run(link(base, vertex_set::singleton(v)));
      });
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

 private:
  field_kind field_;
  std::unordered_map<complex_key, bool, complex_key_hash> memo_;
};

}  // namespace detail

/// Reisner: every link (including the complex itself) has vanishing reduced
/// homology below its top dimension.  Non-pure complexes are rejected early.
inline bool is_cohen_macaulay(const simplicial_complex& c, field_kind field = field_kind::rational) {
  detail::cm_search s(field);
  return s.run(c);
}

// ---------------------------------------------------------------------------
// Shellability.

struct search_options {
  std::size_t facet_cap = 64;
  std::uint64_t node_budget = 0;  // 0: search_budget()
};

struct shelling_result {
  verdict answer = verdict::no;
  std::vector<int> order;  // facet indices of the stripped complex
  std::uint64_t nodes = 0;
};

namespace detail {

/// Every link of a vertex, and the complex itself, is connected through
/// codimension-one faces.  Necessary for shellability of a pure complex.
inline bool strongly_connected(const std::vector<vertex_set>& fs) {
  if (fs.size() <= 1) return true;
  std::vector<char> seen(fs.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < fs.size(); ++b) {
      if (!seen[b] && (fs[a] - fs[b]).size() == 1) {
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == fs.size();
}

class shelling_search {
 public:
  shelling_search(const simplicial_complex& c, std::uint64_t budget)
      : fs_(c.facets()), budget_(budget) {
    auto fh = compute_fh(c);
    h_ = fh.h;
    counts_.assign(h_.size(), 0);
  }

  verdict run(std::vector<int>& order) {
    for (auto x : h_) {
      if (x < 0) return verdict::no;
    }
    dyn_bitset used(fs_.size());
    try {
      return dfs(used, order) ? verdict::yes : verdict::no;
    } catch (const budget_exhausted&) {
      return verdict::inconclusive;
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct budget_exhausted {};

  // Size of the restriction face of facet f, or -1 if f does not attach.
  int restriction_size(const dyn_bitset& used, std::size_t f) const {
    vertex_set r;
    used.for_each([&](std::size_t g) {
      vertex_set d = fs_[f] - fs_[g];
      if (d.size() == 1) r |= d;
    });
    bool ok = true;
    used.for_each([&](std::size_t g) {
      if (ok && !(fs_[f] - fs_[g]).intersects(r)) ok = false;
    });
    return ok ? r.size() : -1;
  }

  bool dfs(dyn_bitset& used, std::vector<int>& order) {
    if (order.size() == fs_.size()) return true;
    if (failed_.count(used)) return false;
    if (++nodes_ > budget_) throw budget_exhausted{};
    for (std::size_t f = 0; f < fs_.size(); ++f) {
      if (used.test(f)) continue;
      int k = order.empty() ? 0 : restriction_size(used, f);
      if (order.size() > 0 && k <= 0) continue;
      auto ks = static_cast<std::size_t>(k);
      if (ks >= h_.size() || counts_[ks] + 1 > h_[ks]) continue;
      ++counts_[ks];
      used.set(f);
      order.push_back(static_cast<int>(f));
      if (dfs(used, order)) return true;
      order.pop_back();
      used.reset(f);
      --counts_[ks];
    }
    failed_.insert(used);
    return false;
  }

  const std::vector<vertex_set>& fs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<long long> h_;
  std::vector<long long> counts_;
  std::unordered_set<dyn_bitset, dyn_bitset_hash> failed_;
};

}  // namespace detail

/// Backtracking over facet orders.  Prunes by the h-vector (a shelling has
/// exactly h_k facets with restriction face of size k), by memoizing failed
/// sets of placed facets, and by strong connectivity.
inline shelling_result find_shelling(const simplicial_complex& c, const search_options& opt = {}) {
  shelling_result res;
  if (!c.is_pure()) return res;
  simplicial_complex base = detail::strip_cone(c);
  if (base.is_simplex()) {
    res.answer = verdict::yes;
    res.order = {0};
    return res;
  }
  if (base.facets().size() > opt.facet_cap) {
    res.answer = verdict::inconclusive;
    return res;
  }
  if (base.dim() >= 1) {
    if (!detail::strongly_connected(base.facets())) return res;
    bool links_ok = true;
    base.vertices().for_each([&](int v) {
      if (links_ok && !detail::strongly_connected(link(base, vertex_set::singleton(v)).facets())) links_ok = false;
    });
    if (!links_ok) return res;
  }
  detail::shelling_search s(base, opt.node_budget ? opt.node_budget : search_budget());
  res.answer = s.run(res.order);
  res.nodes = s.nodes();
  if (res.answer != verdict::yes) res.order.clear();
  return res;
}

inline verdict is_shellable(const simplicial_complex& c, const search_options& opt = {}) {
  return find_shelling(c, opt).answer;
}

/// Checks a proposed shelling order of `c`'s facets directly from the
/// definition, by comparing face sets.
inline bool is_shelling_order(const simplicial_complex& c, const std::vector<int>& order) {
  const auto& fs = c.facets();
  if (order.size() != fs.size() || !c.is_pure()) return false;
  const int d = c.dim() + 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const vertex_set f = fs[static_cast<std::size_t>(order[i])];
    std::vector<vertex_set> inter;
    for (std::size_t j = 0; j < i; ++j) inter.push_back(f & fs[static_cast<std::size_t>(order[j])]);
    auto maximal = detail::maximal_sets(inter);
    for (const auto& m : maximal) {
      if (m.size() != d - 1) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Vertex decomposability.

namespace detail {

class vd_search {
 public:
  explicit vd_search(std::uint64_t budget) : budget_(budget) {}

  verdict run(const simplicial_complex& c) {
    try {
      return rec(c) ? verdict::yes : verdict::no;
    } catch (const budget_exhausted&) {
      return verdict::inconclusive;
    }
  }

 private:
  struct budget_exhausted {};

  bool rec(const simplicial_complex& c) {
    if (!c.is_pure()) return false;
    simplicial_complex base = strip_cone(c);
    if (base.is_simplex()) return true;
    auto key = canonical_key(base);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw budget_exhausted{};
    const int d = base.dim();
    bool found = false;
    base.vertices().for_each([&](int x) {
      if (found) return;
      simplicial_complex del = deletion(base, x);
      // Shedding: no face of the link is a facet of the deletion, i.e. the
      // deletion stays pure of the same dimension.
      if (!del.is_pure() || del.dim() != d) return;
      if (rec(link(base, vertex_set::singleton(x))) && rec(del)) found = true;
    });
    memo_.emplace(std::move(key), found);
    return found;
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<complex_key, bool, complex_key_hash> memo_;
};

}  // namespace detail

inline verdict is_vertex_decomposable(const simplicial_complex& c, const search_options& opt = {}) {
  if (!c.is_pure()) return verdict::no;
  if (c.facets().size() > opt.facet_cap) return verdict::inconclusive;
  detail::vd_search s(opt.node_budget ? opt.node_budget : search_budget());
  return s.run(c);
}

// ---------------------------------------------------------------------------
// Posets through their order complexes.

inline bool is_cm_poset(const poset& p, field_kind field = field_kind::rational) {
  if (p.empty()) throw error(errc::empty_poset, "Cohen-Macaulay test of the empty poset");
  return is_cohen_macaulay(order_complex(p), field);
}

inline verdict is_shellable_poset(const poset& p, const search_options& opt = {}) {
  if (p.empty()) throw error(errc::empty_poset, "shellability of the empty poset");
  return is_shellable(order_complex(p), opt);
}

inline verdict is_vd_poset(const poset& p, const search_options& opt = {}) {
  if (p.empty()) throw error(errc::empty_poset, "vertex decomposability of the empty poset");
  return is_vertex_decomposable(order_complex(p), opt);
}

// ---------------------------------------------------------------------------
// Implication ladder: VD => shellable => CM => pure.

struct ladder_record {
  verdict vd = verdict::inconclusive;
  verdict shellable = verdict::inconclusive;
  bool cm = false;
  bool pure = false;
};

/// True unless some implication of the ladder is violated.  Inconclusive
/// entries are not counted as violations.
inline bool ladder_consistent(const ladder_record& r) {
  if (r.vd == verdict::yes && r.shellable == verdict::no) return false;
  if (r.shellable == verdict::yes && !r.cm) return false;
  if (r.vd == verdict::yes && !r.cm) return false;
  if (r.cm && !r.pure) return false;
  return true;
}

}  // namespace aslkit
