#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "poset.hpp"

namespace aslkit {

inline constexpr int default_lattice_cap = 4096;

/// Finite lattice with meet/join tables.
class lattice {
 public:
  lattice() = default;

  /// Validates that every pair has a meet and a join.
  static lattice from_poset(poset p, std::string kind = "explicit") {
    lattice l;
    const int n = p.size();
    if (n == 0) throw error(errc::not_a_lattice, "empty poset");
    l.meet_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    l.join_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        int m = greatest_of(p, a, b, true);
        int j = greatest_of(p, a, b, false);
        if (m < 0 || j < 0) {
          throw error(errc::not_a_lattice, p.label(a) + " and " + p.label(b) + " lack a meet or join");
        }
        l.set(a, b, m, j, n);
      }
    }
    l.p_ = std::move(p);
    l.kind_ = std::move(kind);
    l.distributive_ = l.check_distributive();
    return l;
  }

  /// Builds from known meet/join operations.
  template <class Meet, class Join>
  static lattice from_operations(poset p, Meet&& meet, Join&& join, std::string kind) {
    lattice l;
    const int n = p.size();
    l.meet_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    l.join_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) l.set(a, b, meet(a, b), join(a, b), n);
    }
    l.p_ = std::move(p);
    l.kind_ = std::move(kind);
    l.distributive_ = l.check_distributive();
    return l;
  }

  const poset& order() const { return p_; }
  int size() const { return p_.size(); }
  const std::string& kind() const { return kind_; }

  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int bottom() const { return p_.bottom(); }
  int top() const { return p_.top(); }
  bool distributive() const { return distributive_; }

  /// Exponent coordinates for divisor lattices, empty otherwise.
  const std::vector<int>& coordinates(int x) const {
    static const std::vector<int> none;
    return coords_.empty() ? none : coords_[static_cast<std::size_t>(x)];
  }
  void set_coordinates(std::vector<std::vector<int>> c) { coords_ = std::move(c); }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(p_.size()) + static_cast<std::size_t>(b);
  }

  void set(int a, int b, int m, int j, int n) {
    auto ab = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
    auto ba = static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
    meet_[ab] = meet_[ba] = m;
    join_[ab] = join_[ba] = j;
  }

  // Greatest lower bound (lower = true) or least upper bound, or -1.
  static int greatest_of(const poset& p, int a, int b, bool lower) {
    dyn_bitset common = lower ? p.down_set(a) : p.up_set(a);
    common &= lower ? p.down_set(b) : p.up_set(b);
    const std::size_t c = common.count();
    int found = -1;
    common.for_each([&](std::size_t x) {
      if (found >= 0) return;
      dyn_bitset s = lower ? p.down_set(static_cast<int>(x)) : p.up_set(static_cast<int>(x));
      s &= common;
      if (s.count() == c) found = static_cast<int>(x);
    });
    return found;
  }

  bool check_distributive() const {
    const int n = p_.size();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = y + 1; z < n; ++z) {
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
        }
      }
    }
    return true;
  }

  poset p_;
  std::string kind_ = "explicit";
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<std::vector<int>> coords_;
  bool distributive_ = false;
};

namespace detail {

inline std::string set_label(const poset& base, std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int k = 0; k < base.size(); ++k) {
    if ((mask >> k) & 1U) {
      if (!first) s += ",";
      s += base.label(k);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace detail

/// Lattice of down-sets of `p` under inclusion, labelled {a,b,...}.
inline lattice birkhoff(const poset& p, int cap = default_lattice_cap, std::string kind = "birkhoff") {
  const int n = p.size();
  if (n > 63) throw error(errc::size_cap_exceeded, "birkhoff supports at most 63 elements");
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y : p.lower_covers(x)) below[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
  }
  auto ext = linear_extension(p);
  std::vector<std::uint64_t> ideals;
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t cur) -> void {
    if (k == ext.size()) {
      ideals.push_back(cur);
      if (static_cast<int>(ideals.size()) > cap) {
        throw error(errc::size_cap_exceeded, "more than " + std::to_string(cap) + " down-sets");
      }
      return;
    }
    int x = ext[k];
    self(self, k + 1, cur);
    if ((below[static_cast<std::size_t>(x)] & ~cur) == 0) self(self, k + 1, cur | (std::uint64_t{1} << x));
  };
  rec(rec, 0, 0);
  std::sort(ideals.begin(), ideals.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::string> names;
  names.reserve(ideals.size());
  for (auto m : ideals) names.push_back(detail::set_label(p, m));
  const auto count = ideals.size();
  std::vector<std::pair<int, int>> covers;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      std::uint64_t d = ideals[b] & ~ideals[a];
      if ((ideals[a] & ~ideals[b]) == 0 && std::popcount(d) == 1) {
        covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  poset lp = poset::from_index_covers(std::move(names), covers);
  auto find = [&](std::uint64_t m) {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), m, [](std::uint64_t a, std::uint64_t b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    return static_cast<int>(it - ideals.begin());
  };
  return lattice::from_operations(
      std::move(lp),
      [&](int a, int b) { return find(ideals[static_cast<std::size_t>(a)] & ideals[static_cast<std::size_t>(b)]); },
      [&](int a, int b) { return find(ideals[static_cast<std::size_t>(a)] | ideals[static_cast<std::size_t>(b)]); },
      std::move(kind));
}

/// B_n: subsets of {1..n}.
inline lattice boolean(int n, int cap = default_lattice_cap) {
  if (n < 0) throw error(errc::bad_arguments, "negative rank");
  if (n > 12 || (1 << n) > cap) throw error(errc::size_cap_exceeded, "boolean lattice too large");
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back(std::to_string(k));
  return birkhoff(poset::from_index_covers(std::move(names), {}), cap, "boolean " + std::to_string(n));
}

/// Divisors of 2^n 3^m, ordered by rank and then by the exponent of 3.
inline lattice divisor(int n, int m, int cap = default_lattice_cap) {
  if (n < 0 || m < 0) throw error(errc::bad_arguments, "negative exponent");
  if (static_cast<long long>(n + 1) * (m + 1) > cap) throw error(errc::size_cap_exceeded, "divisor lattice too large");
  std::vector<std::pair<int, int>> coord;
  for (int r = 0; r <= n + m; ++r) {
    for (int b = 0; b <= m; ++b) {
      int a = r - b;
      if (a >= 0 && a <= n) coord.emplace_back(a, b);
    }
  }
  auto index = [&](int a, int b) {
    for (std::size_t k = 0; k < coord.size(); ++k) {
      if (coord[k] == std::make_pair(a, b)) return static_cast<int>(k);
    }
    return -1;
  };
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::vector<int>> coords;
  for (auto [a, b] : coord) {
    mpz_class v;
    mpz_class p3;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(a));
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(b));
    v *= p3;
    names.push_back(v.get_str());
    coords.push_back({a, b});
    int self = index(a, b);
    if (a < n) covers.emplace_back(self, index(a + 1, b));
    if (b < m) covers.emplace_back(self, index(a, b + 1));
  }
  poset p = poset::from_index_covers(std::move(names), covers);
  lattice l = lattice::from_operations(
      std::move(p),
      [&](int x, int y) {
        auto [a1, b1] = coord[static_cast<std::size_t>(x)];
        auto [a2, b2] = coord[static_cast<std::size_t>(y)];
        return index(std::min(a1, a2), std::min(b1, b2));
      },
      [&](int x, int y) {
        auto [a1, b1] = coord[static_cast<std::size_t>(x)];
        auto [a2, b2] = coord[static_cast<std::size_t>(y)];
        return index(std::max(a1, a2), std::max(b1, b2));
      },
      "divisor " + std::to_string(n) + " " + std::to_string(m));
  l.set_coordinates(std::move(coords));
  return l;
}

/// Element of divisor(n, m) with exponents (a, b).
inline int divisor_element(const lattice& l, int a, int b) {
  for (int x = 0; x < l.size(); ++x) {
    const auto& c = l.coordinates(x);
    if (c.size() == 2 && c[0] == a && c[1] == b) return x;
  }
  throw error(errc::unknown_label, "no divisor with exponents " + std::to_string(a) + "," + std::to_string(b));
}

// ---------------------------------------------------------------------------

/// Unique minimal element and every [0, a] a distributive lattice.
inline bool is_distributive_type(const poset& p) {
  if (p.empty()) return false;
  const int z = p.bottom();
  if (z < 0) return false;
  for (int a = 0; a < p.size(); ++a) {
    try {
      if (!lattice::from_poset(interval(p, z, a)).distributive()) return false;
    } catch (const error& e) {
      if (e.code() != errc::not_a_lattice) throw;
      return false;
    }
  }
  return true;
}

/// Minimal elements of the common upper bounds of a and b.
inline std::vector<int> minimal_upper_bounds(const poset& p, int a, int b) {
  dyn_bitset common = p.up_set(a);
  common &= p.up_set(b);
  std::vector<int> out;
  common.for_each([&](std::size_t x) {
    dyn_bitset below = p.down_set(static_cast<int>(x));
    below &= common;
    if (below.count() == 1) out.push_back(static_cast<int>(x));
  });
  return out;
}

/// Elements other than 0 and 1 comparable to every element.
inline std::vector<int> apices(const lattice& l) {
  const poset& p = l.order();
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    if (x == l.bottom() || x == l.top()) continue;
    bool all = true;
    for (int y = 0; y < p.size() && all; ++y) all = p.comparable(x, y);
    if (all) out.push_back(x);
  }
  return out;
}

inline bool is_simple(const lattice& l) { return apices(l).empty(); }

/// Lattice isomorphic to some B_n: distributive with every element a join of atoms
/// and 2^(atoms) elements.
inline bool is_boolean(const lattice& l) {
  if (!l.distributive()) return false;
  const poset& p = l.order();
  int atoms = static_cast<int>(p.upper_covers(l.bottom()).size());
  if (atoms >= 30) return false;
  return p.size() == (1 << atoms) && rank(p) == atoms;
}

// ---------------------------------------------------------------------------
// Dual order ideals.

/// Upward-closed subset, stored by its minimal elements (sorted).
struct dual_ideal {
  std::vector<int> minimal;

  friend bool operator==(const dual_ideal&, const dual_ideal&) = default;
  friend bool operator<(const dual_ideal& a, const dual_ideal& b) { return a.minimal < b.minimal; }
};

inline dyn_bitset carrier(const poset& p, const dual_ideal& i) {
  dyn_bitset c(static_cast<std::size_t>(p.size()));
  for (int x : i.minimal) c |= p.up_set(x);
  return c;
}

/// Upward closure of `gens`, normalized to its minimal elements.
inline dual_ideal generated_ideal(const poset& p, const std::vector<int>& gens) {
  dual_ideal i;
  for (int g : gens) {
    bool redundant = false;
    for (int h : gens) {
      if (h != g && p.less(h, g)) redundant = true;
    }
    if (!redundant) i.minimal.push_back(g);
  }
  std::sort(i.minimal.begin(), i.minimal.end());
  i.minimal.erase(std::unique(i.minimal.begin(), i.minimal.end()), i.minimal.end());
  return i;
}

/// Validates that `c` is upward closed and returns its minimal elements.
inline dual_ideal dual_ideal_from_carrier(const poset& p, const dyn_bitset& c) {
  dual_ideal i;
  for (int x = 0; x < p.size(); ++x) {
    if (!c.test(static_cast<std::size_t>(x))) continue;
    dyn_bitset up = p.up_set(x);
    up &= c;
    if (!(up == p.up_set(x))) throw error(errc::ideal_not_upward_closed, "element above " + p.label(x) + " missing");
    bool minimal = true;
    for (int y : p.lower_covers(x)) minimal = minimal && !c.test(static_cast<std::size_t>(y));
    if (minimal) i.minimal.push_back(x);
  }
  return i;
}

/// All dual order ideals, one per antichain, ordered by (size, elements).
inline std::vector<dual_ideal> enumerate_dual_ideals(const poset& p, int cap = 25) {
  if (p.size() > cap) throw error(errc::size_cap_exceeded, "dual-ideal enumeration capped at " + std::to_string(cap));
  std::vector<dual_ideal> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    out.push_back(dual_ideal{cur});
    for (int x = from; x < p.size(); ++x) {
      bool ok = true;
      for (int y : cur) ok = ok && !p.comparable(x, y);
      if (!ok) continue;
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const dual_ideal& a, const dual_ideal& b) {
    return a.minimal.size() != b.minimal.size() ? a.minimal.size() < b.minimal.size() : a.minimal < b.minimal;
  });
  return out;
}

/// Dual ideal whose minimal elements are all elements of rank r.
inline dual_ideal rank_fixed_ideal(const poset& p, int r) {
  auto rk = ranks(p);
  dual_ideal i;
  for (int x = 0; x < p.size(); ++x) {
    if (rk[static_cast<std::size_t>(x)] == r) i.minimal.push_back(x);
  }
  return i;
}

inline bool is_rank_fixed(const poset& p, const dual_ideal& i) {
  if (i.minimal.empty()) return true;
  auto rk = ranks(p);
  return rank_fixed_ideal(p, rk[static_cast<std::size_t>(i.minimal.front())]) == i;
}

inline bool is_rank_fixed(const lattice& l, const dual_ideal& i) { return is_rank_fixed(l.order(), i); }

/// L_a = {x : x not >= a}.
inline poset sub_l_a(const lattice& l, int a) {
  const poset& p = l.order();
  dyn_bitset keep(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    if (!p.leq(a, x)) keep.set(static_cast<std::size_t>(x));
  }
  return p.induced(keep);
}

struct complement_result {
  poset result;
  bool empty = false;  // I = L
};

/// L \ I, checked to be of distributive type unless empty.
inline complement_result remove_dual_ideal(const lattice& l, const dual_ideal& i) {
  const poset& p = l.order();
  dyn_bitset c = carrier(p, i);
  dyn_bitset keep(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    if (!c.test(static_cast<std::size_t>(x))) keep.set(static_cast<std::size_t>(x));
  }
  complement_result out;
  out.result = p.induced(keep);
  out.empty = out.result.empty();
  if (!out.empty && l.distributive() && !is_distributive_type(out.result)) {
    throw error(errc::internal_mismatch, "complement of a dual ideal is not of distributive type");
  }
  return out;
}

inline dual_ideal parse_dual_ideal(const poset& p, const std::vector<std::string>& names) {
  std::vector<int> gens;
  for (const auto& n : names) gens.push_back(p.index_of(n));
  auto i = generated_ideal(p, gens);
  if (i.minimal.size() != gens.size()) {
    throw error(errc::bad_arguments, "listed minimal elements are not an antichain");
  }
  return i;
}

inline std::string serialize(const poset& p, const dual_ideal& i) {
  std::string s = "minimal:";
  for (int x : i.minimal) s += " " + p.label(x);
  return s + "\n";
}

/// Poset text plus a `kind:` header.
inline std::string serialize(const lattice& l) { return "kind: " + l.kind() + "\n" + serialize(l.order()); }

// ---------------------------------------------------------------------------
// Divisor lattices: the structural normal form.

struct divisor_reduction {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> minimal;  // exponents of min(I'), alpha descending
  bool rank_fixed = false;
};

namespace detail {

inline bool grid_rank_fixed(int n, int m, const std::vector<std::pair<int, int>>& mins) {
  if (mins.empty()) return true;
  int r = mins.front().first + mins.front().second;
  std::size_t expect = 0;
  for (int a = 0; a <= n; ++a) {
    int b = r - a;
    if (b >= 0 && b <= m) ++expect;
  }
  for (auto [a, b] : mins) {
    if (a + b != r) return false;
  }
  return mins.size() == expect;
}

}  // namespace detail

/// Strips pure powers 2^a or 3^b from min(I), replacing the ambient lattice by
/// the sublattice they cut off, until min(I') is rank-fixed or no pure power
/// remains.  Requires I != L.
inline divisor_reduction reduce_divisor_ideal(int n, int m, std::vector<std::pair<int, int>> mins) {
  std::sort(mins.begin(), mins.end(), [](auto x, auto y) { return x.first > y.first; });
  for (auto [a, b] : mins) {
    if (a == 0 && b == 0) throw error(errc::bad_arguments, "ideal equals the whole lattice");
  }
  divisor_reduction r{n, m, mins, false};
  while (true) {
    if (detail::grid_rank_fixed(r.n, r.m, r.minimal)) {
      r.rank_fixed = true;
      return r;
    }
    const auto& first = r.minimal.front();
    const auto& last = r.minimal.back();
    if (first.second == 0) {
      r.n = first.first - 1;
    } else if (last.first == 0) {
      r.m = last.second - 1;
    } else {
      return r;
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : r.minimal) {
      if (a <= r.n && b <= r.m) kept.emplace_back(a, b);
    }
    r.minimal = std::move(kept);
  }
}

inline divisor_reduction reduce_divisor_ideal(const lattice& l, const dual_ideal& i) {
  const auto& c0 = l.coordinates(l.top());
  if (c0.size() != 2) throw error(errc::bad_arguments, "not a divisor lattice");
  std::vector<std::pair<int, int>> mins;
  for (int x : i.minimal) mins.emplace_back(l.coordinates(x)[0], l.coordinates(x)[1]);
  return reduce_divisor_ideal(c0[0], c0[1], mins);
}

}  // namespace aslkit
