#pragma once

// Isomorphism classes of small posets.  Classes of size n are generated by
// adding a new maximal element above every down-set of each class of size
// n-1, and deduplicated by a canonical code: the minimum, over all linear
// extensions, of the strict upper-triangular order matrix read column by
// column.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poset.hpp"

namespace aslkit {

namespace detail {

/// Poset on {0..n-1} given by strict down-sets; labels are a linear extension.
struct small_poset {
  int n = 0;
  std::vector<std::uint32_t> below;  // bit i of below[j]: i < j
};

struct canonical_result {
  std::uint64_t code = 0;
  std::vector<int> order;  // order[pos] = original element
};

inline void canon_search(const small_poset& p, std::vector<int>& order, std::uint32_t placed,
                         std::uint64_t prefix, bool strictly_less, canonical_result& best,
                         bool& have_best) {
  const int pos = static_cast<int>(order.size());
  const int n = p.n;
  if (pos == n) {
    if (!have_best || prefix < best.code) {
      best.code = prefix;
      best.order = order;
      have_best = true;
    }
    return;
  }
  const int total_bits = n * (n - 1) / 2;
  for (int x = 0; x < n; ++x) {
    if ((placed >> x) & 1U) continue;
    if ((p.below[static_cast<std::size_t>(x)] & ~placed) != 0) continue;
    std::uint64_t next = prefix;
    for (int i = 0; i < pos; ++i) {
      int y = order[static_cast<std::size_t>(i)];
      next = (next << 1) | ((p.below[static_cast<std::size_t>(x)] >> y) & 1U);
    }
    bool less_now = strictly_less;
    if (have_best && !strictly_less) {
      const int len = (pos + 1) * pos / 2;
      std::uint64_t best_prefix = best.code >> (total_bits - len);
      if (next > best_prefix) continue;
      if (next < best_prefix) less_now = true;
    }
    order.push_back(x);
    canon_search(p, order, placed | (1U << x), next, less_now, best, have_best);
    order.pop_back();
  }
}

inline canonical_result canonical_form(const small_poset& p) {
  canonical_result best;
  bool have = false;
  std::vector<int> order;
  canon_search(p, order, 0, 0, false, best, have);
  return best;
}

inline small_poset relabel(const small_poset& p, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<std::size_t>(p.n));
  for (int k = 0; k < p.n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  small_poset q;
  q.n = p.n;
  q.below.assign(static_cast<std::size_t>(p.n), 0);
  for (int x = 0; x < p.n; ++x) {
    std::uint32_t m = 0;
    for (int y = 0; y < p.n; ++y) {
      if ((p.below[static_cast<std::size_t>(x)] >> y) & 1U) m |= 1U << pos[static_cast<std::size_t>(y)];
    }
    q.below[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])] = m;
  }
  return q;
}

inline std::vector<std::uint32_t> down_sets(const small_poset& p) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = p.n == 0 ? 0U : ((1U << p.n) - 1U);
  for (std::uint32_t s = 0;; ++s) {
    bool closed = true;
    for (int x = 0; x < p.n && closed; ++x) {
      if (((s >> x) & 1U) && (p.below[static_cast<std::size_t>(x)] & ~s) != 0) closed = false;
    }
    if (closed) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

inline poset to_poset(const small_poset& p) {
  std::vector<std::string> names;
  for (int k = 0; k < p.n; ++k) names.push_back("p" + std::to_string(k));
  return poset::from_relation(std::move(names), [&](int a, int b) {
    return a == b || ((p.below[static_cast<std::size_t>(b)] >> a) & 1U);
  });
}

}  // namespace detail

inline constexpr int max_enumeration_size = 7;

/// Canonical code of a poset with at most seven elements, with the size in
/// the top byte; equal codes iff isomorphic.
inline std::uint64_t canonical_code(const poset& p) {
  if (p.size() > max_enumeration_size) throw error(errc::size_cap_exceeded, "canonical code needs at most 7 elements");
  detail::small_poset s;
  s.n = p.size();
  s.below.assign(static_cast<std::size_t>(s.n), 0);
  for (int b = 0; b < s.n; ++b) {
    for (int a = 0; a < s.n; ++a) {
      if (p.less(a, b)) s.below[static_cast<std::size_t>(b)] |= 1U << a;
    }
  }
  return detail::canonical_form(s).code | (static_cast<std::uint64_t>(s.n) << 56);
}

/// All isomorphism classes of n-element posets, ordered by canonical code.
/// Elements are labelled p0..p{n-1} along the canonical linear extension.
inline std::vector<poset> enumerate_posets(int n) {
  if (n < 1) throw error(errc::bad_arguments, "poset size must be at least 1");
  if (n > max_enumeration_size) throw error(errc::size_cap_exceeded, "enumeration supports n <= 7");
  std::map<std::uint64_t, detail::small_poset> level;
  level.emplace(0, detail::small_poset{0, {}});
  for (int k = 1; k <= n; ++k) {
    std::map<std::uint64_t, detail::small_poset> next;
    for (const auto& [code, q] : level) {
      (void)code;
      for (std::uint32_t d : detail::down_sets(q)) {
        detail::small_poset r = q;
        r.n = k;
        r.below.push_back(d);
        auto c = detail::canonical_form(r);
        if (next.count(c.code) == 0) next.emplace(c.code, detail::relabel(r, c.order));
      }
    }
    level = std::move(next);
  }
  std::vector<poset> out;
  out.reserve(level.size());
  for (const auto& [code, q] : level) {
    (void)code;
    out.push_back(detail::to_poset(q));
  }
  return out;
}

}  // namespace aslkit
