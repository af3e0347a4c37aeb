#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "poset.hpp"

namespace aslkit {

/// Quadratic generator attached to an incomparable pair.
struct straightening_generator {
  int alpha = 0;  // poset elements, alpha < beta as indices
  int beta = 0;
  polynomial f;
};

/// Ideal in K[x_p : p in P].  Variable k of every monomial is the element
/// order[k] of a fixed linear extension, so the degree reverse lexicographic
/// order on monomials is the order induced by that extension.
struct straightening_ideal {
  poset p;
  std::vector<int> order;  // variable -> element
  std::vector<int> var;    // element -> variable
  std::vector<straightening_generator> generators;

  int num_vars() const { return p.size(); }
  int element(int v) const { return order[static_cast<std::size_t>(v)]; }
  int variable(int x) const { return var[static_cast<std::size_t>(x)]; }

  monomial product(int a, int b) const { return monomial({variable(a), variable(b)}); }

  std::string format(const polynomial& f) const {
    return format_polynomial(f, [&](int v) { return p.label(element(v)); });
  }
};

namespace detail {

inline straightening_ideal empty_ideal(const poset& p, std::vector<int> order) {
  straightening_ideal j;
  j.p = p;
  if (order.empty()) order = linear_extension(p);
  if (static_cast<int>(order.size()) != p.size()) throw error(errc::bad_arguments, "linear extension has wrong size");
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (p.less(order[b], order[a])) throw error(errc::bad_arguments, "order is not a linear extension");
    }
  }
  j.order = std::move(order);
  j.var.assign(static_cast<std::size_t>(p.size()), 0);
  for (int k = 0; k < p.size(); ++k) j.var[static_cast<std::size_t>(j.order[static_cast<std::size_t>(k)])] = k;
  return j;
}

/// Greatest common lower bound, which exists in a poset with 0 whenever a
/// common upper bound exists in a distributive-type poset.
inline int greatest_lower_bound(const poset& p, int a, int b) {
  dyn_bitset common = p.down_set(a);
  common &= p.down_set(b);
  const std::size_t c = common.count();
  int found = -1;
  common.for_each([&](std::size_t x) {
    dyn_bitset s = p.down_set(static_cast<int>(x));
    s &= common;
    if (s.count() == c) found = static_cast<int>(x);
  });
  return found;
}

}  // namespace detail

/// f = x_a x_b when a, b have no common upper bound, otherwise
/// f = x_a x_b - x_{a meet b} * (sum of x_g over minimal upper bounds g).
inline straightening_ideal straightening_generators(const poset& p, std::vector<int> order = {}) {
  if (!is_distributive_type(p)) throw error(errc::not_distributive_type, "poset is not of distributive type");
  straightening_ideal j = detail::empty_ideal(p, std::move(order));
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      if (p.comparable(a, b)) continue;
      polynomial f(j.product(a, b), 1);
      auto ub = minimal_upper_bounds(p, a, b);
      if (!ub.empty()) {
        int m = detail::greatest_lower_bound(p, a, b);
        if (m < 0) throw error(errc::internal_mismatch, "meet missing below a common upper bound");
        for (int g : ub) f.add_term(j.product(m, g), -1);
      }
      j.generators.push_back({a, b, std::move(f)});
    }
  }
  return j;
}

/// x_a x_b - x_{a join b} x_{a meet b} for every incomparable pair.
inline straightening_ideal join_meet_generators(const lattice& l, std::vector<int> order = {}) {
  const poset& p = l.order();
  straightening_ideal j = detail::empty_ideal(p, std::move(order));
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      if (p.comparable(a, b)) continue;
      polynomial f(j.product(a, b), 1);
      f.add_term(j.product(l.join(a, b), l.meet(a, b)), -1);
      j.generators.push_back({a, b, std::move(f)});
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Division.

namespace detail {

/// A generator whose leading monomial divides m, or -1.  Leading monomials
/// are the products x_a x_b of incomparable pairs, so m is reducible exactly
/// when its support is not a chain.
inline int reducer(const straightening_ideal& j, const monomial& m,
                   const std::map<std::pair<int, int>, int>& by_pair) {
  const auto& v = m.vars;
  for (std::size_t s = 0; s < v.size(); ++s) {
    for (std::size_t t = s + 1; t < v.size(); ++t) {
      if (v[s] == v[t]) continue;
      int a = j.element(v[s]), b = j.element(v[t]);
      if (j.p.comparable(a, b)) continue;
      auto it = by_pair.find({std::min(a, b), std::max(a, b)});
      if (it != by_pair.end()) return it->second;
    }
  }
  return -1;
}

inline std::map<std::pair<int, int>, int> pair_index(const straightening_ideal& j) {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t k = 0; k < j.generators.size(); ++k) {
    out.emplace(std::make_pair(j.generators[k].alpha, j.generators[k].beta), static_cast<int>(k));
  }
  return out;
}

}  // namespace detail

/// Normal form modulo the generators; terms in the result are standard
/// monomials (their supports are multichains).
class normal_former {
 public:
  explicit normal_former(const straightening_ideal& j) : j_(j), by_pair_(detail::pair_index(j)) {
    for (const auto& g : j_.generators) {
      if (g.f.leading_monomial() != j_.product(g.alpha, g.beta) || g.f.leading_coefficient() != 1) {
        throw error(errc::internal_mismatch, "generator leading term is not x_a x_b");
      }
    }
  }

  polynomial operator()(polynomial f) const {
    polynomial rem;
    while (!f.is_zero()) {
      monomial m = f.leading_monomial();
      mpq_class c = f.leading_coefficient();
      int g = detail::reducer(j_, m, by_pair_);
      if (g < 0) {
        rem.add_term(m, c);
        f.add_term(m, -c);
        continue;
      }
      const auto& gen = j_.generators[static_cast<std::size_t>(g)];
      f -= gen.f.scaled(m.quotient(gen.f.leading_monomial()), c);
    }
    return rem;
  }

  /// Normal form of a single monomial, cached.
  const polynomial& of(const monomial& m) const {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(m, (*this)(polynomial(m, 1))).first->second;
  }

  bool is_standard(const monomial& m) const { return detail::reducer(j_, m, by_pair_) < 0; }

 private:
  const straightening_ideal& j_;
  std::map<std::pair<int, int>, int> by_pair_;
  mutable std::map<monomial, polynomial> cache_;
};

inline polynomial normal_form(const polynomial& f, const straightening_ideal& j) { return normal_former(j)(f); }

// ---------------------------------------------------------------------------
// Checks.

inline constexpr int default_buchberger_cap = 10;

/// All S-polynomials reduce to zero.  Pairs with coprime leading monomials
/// are skipped unless `strict`.
inline bool buchberger_check(const straightening_ideal& j, bool strict = false, int cap = default_buchberger_cap) {
  if (j.p.size() > cap) throw error(errc::size_cap_exceeded, "Buchberger check capped at " + std::to_string(cap) + " elements");
  normal_former nf(j);
  const auto& g = j.generators;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const monomial& ma = g[a].f.leading_monomial();
      const monomial& mb = g[b].f.leading_monomial();
      if (!strict && coprime(ma, mb)) continue;
      monomial l = lcm(ma, mb);
      polynomial s = g[a].f.scaled(l.quotient(ma), 1) - g[b].f.scaled(l.quotient(mb), 1);
      if (!nf(s).is_zero()) return false;
    }
  }
  return true;
}

/// In the straightening of x_a x_b every standard monomial has its least
/// factor below both a and b.
inline bool asl2_check(const straightening_ideal& j) {
  normal_former nf(j);
  for (const auto& g : j.generators) {
    polynomial r = nf(polynomial(j.product(g.alpha, g.beta), 1));
    for (const auto& [m, c] : r.terms()) {
      (void)c;
      int least = j.element(m.vars.front());
      for (int v : m.vars) {
        if (j.p.less(j.element(v), least)) least = j.element(v);
      }
      if (!j.p.leq(least, g.alpha) || !j.p.leq(least, g.beta)) return false;
    }
  }
  return true;
}

/// Multichains of length d as standard monomials, in increasing order.
inline std::vector<monomial> standard_monomials(const straightening_ideal& j, int d) {
  std::vector<monomial> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.emplace_back(cur);
      return;
    }
    for (int v = from; v < j.num_vars(); ++v) {
      if (!cur.empty() && !j.p.leq(j.element(cur.back()), j.element(v))) continue;
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of multichains x_1 <= ... <= x_d.
inline unsigned long long count_standard_monomials(const poset& p, int d) {
  if (d == 0) return 1;
  const int n = p.size();
  std::vector<unsigned long long> ending(static_cast<std::size_t>(n), 1);
  for (int step = 1; step < d; ++step) {
    std::vector<unsigned long long> next(static_cast<std::size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
      p.down_set(y).for_each([&](std::size_t x) { next[static_cast<std::size_t>(y)] += ending[x]; });
    }
    ending = std::move(next);
  }
  unsigned long long total = 0;
  for (auto e : ending) total += e;
  return total;
}

namespace detail {

inline void all_monomials(int nvars, int d, std::vector<monomial>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.emplace_back(cur);
      return;
    }
    for (int v = from; v < nvars; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline constexpr int default_hilbert_degree_cap = 6;

/// dim of the degree-d part of the quotient, by the standard-monomial count
/// and independently by the rank of the degree-d part of the ideal.
inline unsigned long long hilbert_function(const straightening_ideal& j, int d, int cap = default_hilbert_degree_cap) {
  if (d < 0) throw error(errc::bad_arguments, "negative degree");
  if (d > cap) throw error(errc::size_cap_exceeded, "Hilbert function degree capped at " + std::to_string(cap));
  unsigned long long by_count = count_standard_monomials(j.p, d);
  std::vector<monomial> all;
  detail::all_monomials(j.num_vars(), d, all);
  unsigned long long by_rank = all.size();
  if (d >= 2 && !j.generators.empty()) {
    std::map<monomial, int> col;
    for (std::size_t k = 0; k < all.size(); ++k) col.emplace(all[k], static_cast<int>(k));
    std::vector<monomial> mult;
    detail::all_monomials(j.num_vars(), d - 2, mult);
    std::vector<sparse_row<mpq_class>> rows;
    for (const auto& g : j.generators) {
      for (const auto& m : mult) {
        sparse_row<mpq_class> r;
        for (const auto& [t, c] : g.f.terms()) r.emplace_back(col.at(t * m), c);
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(r));
      }
    }
    by_rank -= static_cast<unsigned long long>(rank_rational(rows, static_cast<int>(all.size())));
  }
  if (by_count != by_rank) {
    throw error(errc::internal_mismatch, "Hilbert function: standard monomials " + std::to_string(by_count) +
                                             " vs rank route " + std::to_string(by_rank));
  }
  return by_count;
}

namespace detail {

inline void bron_kerbosch(const graph& g, vertex_set r, vertex_set p, vertex_set x, std::vector<vertex_set>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = (p | x).front();
  vertex_set cand = p;
  g.neighbours(pivot).for_each([&](std::size_t u) { cand.erase(static_cast<int>(u)); });
  cand.for_each([&](int v) {
    vertex_set nb;
    g.neighbours(v).for_each([&](std::size_t u) { nb.insert(static_cast<int>(u)); });
    bron_kerbosch(g, r | vertex_set::singleton(v), p & nb, x & nb, out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace detail

/// Stanley-Reisner complex of the ideal of leading monomials.  The leading
/// monomials are squarefree quadrics, so the complex is the clique complex of
/// the graph of pairs that are not leading monomials; it must equal the order
/// complex.
inline simplicial_complex initial_ideal(const straightening_ideal& j) {
  const int n = j.num_vars();
  if (n > vertex_set::capacity) throw error(errc::size_cap_exceeded, "at most 128 variables");
  graph allowed(n);
  std::vector<char> lead(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& g : j.generators) {
    const auto& m = g.f.leading_monomial().vars;
    if (m.size() != 2 || m[0] == m[1]) throw error(errc::internal_mismatch, "leading monomial is not a squarefree quadric");
    int a = j.element(m[0]), b = j.element(m[1]);
    lead[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = 1;
    lead[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!lead[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)]) allowed.add_edge(a, b);
    }
  }
  std::vector<vertex_set> cliques;
  detail::bron_kerbosch(allowed, {}, vertex_set::range(n), {}, cliques);
  auto c = simplicial_complex::from_facets(j.p.labels(), std::move(cliques));
  if (!(c == order_complex(j.p))) throw error(errc::internal_mismatch, "initial complex differs from the order complex");
  return c;
}

}  // namespace aslkit
