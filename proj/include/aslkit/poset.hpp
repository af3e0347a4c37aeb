#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace aslkit {

/// Finite poset on labelled elements.  Elements are addressed by index; the
/// order is stored as up-set and down-set bit rows, covers as sorted pairs.
class poset {
 public:
  poset() = default;

  /// Builds from possibly redundant cover pairs given by index.
  static poset from_index_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& pairs) {
    poset p;
    p.init_labels(std::move(labels));
    const int n = p.size();
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw error(errc::unknown_label, "cover index out of range");
      if (a == b) throw error(errc::cycle_detected, "element covers itself: " + p.labels_[static_cast<std::size_t>(a)]);
      succ[static_cast<std::size_t>(a)].push_back(b);
      ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<int> topo;
    topo.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (indeg[static_cast<std::size_t>(v)] == 0) topo.push_back(v);
    }
    for (std::size_t k = 0; k < topo.size(); ++k) {
      for (int w : succ[static_cast<std::size_t>(topo[k])]) {
        if (--indeg[static_cast<std::size_t>(w)] == 0) topo.push_back(w);
      }
    }
    if (static_cast<int>(topo.size()) != n) throw error(errc::cycle_detected, "cover relation has a cycle");
    p.up_.assign(static_cast<std::size_t>(n), dyn_bitset(static_cast<std::size_t>(n)));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      auto& row = p.up_[static_cast<std::size_t>(*it)];
      row.set(static_cast<std::size_t>(*it));
      for (int w : succ[static_cast<std::size_t>(*it)]) row |= p.up_[static_cast<std::size_t>(w)];
    }
    p.finish();
    return p;
  }

  static poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, int> index;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!index.emplace(labels[k], static_cast<int>(k)).second) {
        throw error(errc::duplicate_label, labels[k]);
      }
    }
    std::vector<std::pair<int, int>> idx;
    idx.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end()) throw error(errc::unknown_label, a);
      if (ib == index.end()) throw error(errc::unknown_label, b);
      idx.emplace_back(ia->second, ib->second);
    }
    return from_index_covers(std::move(labels), idx);
  }

  /// Builds from a predicate leq(i, j) that is already a partial order.
  template <class Leq>
  static poset from_relation(std::vector<std::string> labels, Leq&& leq) {
    poset p;
    p.init_labels(std::move(labels));
    const int n = p.size();
    p.up_.assign(static_cast<std::size_t>(n), dyn_bitset(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (leq(a, b)) p.up_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
      }
    }
    for (int a = 0; a < n; ++a) {
      if (!p.leq(a, a)) throw error(errc::bad_arguments, "relation is not reflexive");
      for (int b = a + 1; b < n; ++b) {
        if (p.leq(a, b) && p.leq(b, a)) throw error(errc::cycle_detected, "relation is not antisymmetric");
      }
    }
    p.finish();
    for (int a = 0; a < n; ++a) {
      dyn_bitset closure(static_cast<std::size_t>(n));
      closure.set(static_cast<std::size_t>(a));
      for (int c : p.upper_covers(a)) closure |= p.up_[static_cast<std::size_t>(c)];
      if (!(closure == p.up_[static_cast<std::size_t>(a)])) {
        throw error(errc::bad_arguments, "relation is not transitive");
      }
    }
    return p;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }

  int index_of(std::string_view name) const {
    for (int k = 0; k < size(); ++k) {
      if (labels_[static_cast<std::size_t>(k)] == name) return k;
    }
    throw error(errc::unknown_label, std::string(name));
  }

  bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Elements y with x <= y, and with y <= x.
  const dyn_bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
  const dyn_bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }

  /// Cover pairs sorted by (lower, upper).
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return upper_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& lower_covers(int x) const { return lower_[static_cast<std::size_t>(x)]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
      if (lower_covers(x).empty()) out.push_back(x);
    }
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
      if (upper_covers(x).empty()) out.push_back(x);
    }
    return out;
  }

  /// Unique minimal element, or -1.
  int bottom() const {
    auto m = minimal_elements();
    return m.size() == 1 ? m.front() : -1;
  }
  /// Unique maximal element, or -1.
  int top() const {
    auto m = maximal_elements();
    return m.size() == 1 ? m.front() : -1;
  }

  /// Induced subposet on `elems`, in that order.
  poset induced(const std::vector<int>& elems) const {
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (int e : elems) names.push_back(label(e));
    return from_relation(std::move(names), [&](int a, int b) {
      return leq(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]);
    });
  }

  /// Induced subposet on the elements whose bit is set, in index order.
  poset induced(const dyn_bitset& keep) const {
    std::vector<int> elems;
    keep.for_each([&](std::size_t v) { elems.push_back(static_cast<int>(v)); });
    return induced(elems);
  }

  friend bool operator==(const poset& a, const poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  void init_labels(std::vector<std::string> labels) {
    std::unordered_map<std::string, int> seen;
    for (const auto& l : labels) {
      if (!seen.emplace(l, 0).second) throw error(errc::duplicate_label, l);
    }
    labels_ = std::move(labels);
  }

  void finish() {
    const auto n = labels_.size();
    down_.assign(n, dyn_bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
      up_[a].for_each([&](std::size_t b) { down_[b].set(a); });
    }
    upper_.assign(n, {});
    lower_.assign(n, {});
    covers_.clear();
    for (std::size_t a = 0; a < n; ++a) {
      up_[a].for_each([&](std::size_t b) {
        if (a == b) return;
        dyn_bitset between = up_[a];
        between &= down_[b];
        if (between.count() == 2) {
          covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
          upper_[a].push_back(static_cast<int>(b));
          lower_[b].push_back(static_cast<int>(a));
        }
      });
    }
  }

  std::vector<std::string> labels_;
  std::vector<dyn_bitset> up_;
  std::vector<dyn_bitset> down_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
};

// ---------------------------------------------------------------------------
// Standard families.

inline poset chain_poset(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> cov;
  for (int k = 0; k < n; ++k) {
    names.push_back("c" + std::to_string(k));
    if (k > 0) cov.emplace_back(k - 1, k);
  }
  return poset::from_index_covers(std::move(names), cov);
}

inline poset antichain_poset(int n) {
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back("a" + std::to_string(k));
  return poset::from_index_covers(std::move(names), {});
}

// ---------------------------------------------------------------------------
// Ranks, purity and intervals.

/// Length of the longest chain ending at each element.
inline std::vector<int> ranks(const poset& p) {
  const int n = p.size();
  std::vector<int> r(static_cast<std::size_t>(n), -1);
  // Covers are sorted by lower index, which is not a topological order, so
  // process by down-set size instead.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  for (int x : order) {
    int best = 0;
    for (int y : p.lower_covers(x)) best = std::max(best, r[static_cast<std::size_t>(y)] + 1);
    r[static_cast<std::size_t>(x)] = best;
  }
  return r;
}

inline int rank_of(const poset& p, int x) {
  if (x < 0 || x >= p.size()) throw error(errc::unknown_label, "element index out of range");
  return ranks(p)[static_cast<std::size_t>(x)];
}

inline int rank_of(const poset& p, std::string_view name) { return rank_of(p, p.index_of(name)); }

/// rank(P): the maximum element rank.
inline int rank(const poset& p) {
  if (p.empty()) throw error(errc::empty_poset, "rank of the empty poset");
  auto r = ranks(p);
  return *std::max_element(r.begin(), r.end());
}

/// Every maximal chain has the same cardinality.
inline bool is_pure(const poset& p) {
  if (p.empty()) throw error(errc::empty_poset, "purity of the empty poset");
  const int n = p.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int x : order) {
    const auto& lc = p.lower_covers(x);
    if (lc.empty()) {
      lo[static_cast<std::size_t>(x)] = hi[static_cast<std::size_t>(x)] = 0;
      continue;
    }
    int a = n, b = 0;
    for (int y : lc) {
      a = std::min(a, lo[static_cast<std::size_t>(y)] + 1);
      b = std::max(b, hi[static_cast<std::size_t>(y)] + 1);
    }
    lo[static_cast<std::size_t>(x)] = a;
    hi[static_cast<std::size_t>(x)] = b;
  }
  int common = -1;
  for (int m : p.maximal_elements()) {
    if (lo[static_cast<std::size_t>(m)] != hi[static_cast<std::size_t>(m)]) return false;
    if (common >= 0 && lo[static_cast<std::size_t>(m)] != common) return false;
    common = lo[static_cast<std::size_t>(m)];
  }
  return true;
}

/// [a, b] as an induced subposet.
inline poset interval(const poset& p, int a, int b) {
  if (!p.leq(a, b)) throw error(errc::not_comparable, p.label(a) + " is not below " + p.label(b));
  dyn_bitset keep = p.up_set(a);
  keep &= p.down_set(b);
  return p.induced(keep);
}

inline poset interval(const poset& p, std::string_view a, std::string_view b) {
  return interval(p, p.index_of(a), p.index_of(b));
}

// ---------------------------------------------------------------------------
// Ordinal sums of antichains: three independent characterizations.

/// If p1 < p2 then every q is comparable to p1 or to p2.
inline bool clutter_two_element_test(const poset& p) {
  for (int p1 = 0; p1 < p.size(); ++p1) {
    for (int p2 = 0; p2 < p.size(); ++p2) {
      if (!p.less(p1, p2)) continue;
      for (int q = 0; q < p.size(); ++q) {
        if (!p.comparable(q, p1) && !p.comparable(q, p2)) return false;
      }
    }
  }
  return true;
}

/// Pure, and rank(p) < rank(q) forces p < q.
inline bool clutter_rank_test(const poset& p) {
  if (p.empty()) return true;
  if (!is_pure(p)) return false;
  auto r = ranks(p);
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (r[static_cast<std::size_t>(a)] < r[static_cast<std::size_t>(b)] && !p.less(a, b)) return false;
    }
  }
  return true;
}

/// Peels off the minimal elements and checks they lie below everything else.
inline bool clutter_ordinal_sum_test(const poset& p) {
  const int n = p.size();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  int left = n;
  while (left > 0) {
    std::vector<int> level;
    for (int x = 0; x < n; ++x) {
      if (removed[static_cast<std::size_t>(x)]) continue;
      bool minimal = true;
      for (int y = 0; y < n && minimal; ++y) {
        if (!removed[static_cast<std::size_t>(y)] && p.less(y, x)) minimal = false;
      }
      if (minimal) level.push_back(x);
    }
    for (int x : level) removed[static_cast<std::size_t>(x)] = 1;
    left -= static_cast<int>(level.size());
    for (int x : level) {
      for (int y = 0; y < n; ++y) {
        if (!removed[static_cast<std::size_t>(y)] && !p.less(x, y)) return false;
      }
    }
  }
  return true;
}

/// True iff P is an ordinal sum of antichains.  The three characterizations
/// are evaluated independently and must agree.
inline bool is_sum_of_antichains(const poset& p) {
  bool i = clutter_two_element_test(p);
  bool ii = clutter_rank_test(p);
  bool iii = clutter_ordinal_sum_test(p);
  if (i != ii || ii != iii) {
    throw error(errc::internal_mismatch, "antichain-sum characterizations disagree");
  }
  return iii;
}

// ---------------------------------------------------------------------------
// Comparability graph, linear extension, chains.

inline graph comparability_graph(const poset& p) {
  graph g(p.size());
  for (int a = 0; a < p.size(); ++a) {
    p.up_set(a).for_each([&](std::size_t b) {
      if (static_cast<int>(b) != a) g.add_edge(a, static_cast<int>(b));
    });
  }
  return g;
}

/// Elements sorted by (rank, index).
inline std::vector<int> linear_extension(const poset& p) {
  auto r = ranks(p);
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return r[static_cast<std::size_t>(a)] < r[static_cast<std::size_t>(b)];
  });
  return order;
}

/// All maximal chains, each listed bottom to top.
inline std::vector<std::vector<int>> maximal_chains(const poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int x) -> void {
    cur.push_back(x);
    const auto& up = p.upper_covers(x);
    if (up.empty()) {
      out.push_back(cur);
    } else {
      for (int y : up) self(self, y);
    }
    cur.pop_back();
  };
  for (int m : p.minimal_elements()) rec(rec, m);
  return out;
}

// ---------------------------------------------------------------------------
// Text format.

namespace detail {

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '<' || c == '#' || c == ':' || static_cast<unsigned char>(c) <= ' ') return false;
  }
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && static_cast<unsigned char>(s.front()) <= ' ') s.remove_prefix(1);
  while (!s.empty() && static_cast<unsigned char>(s.back()) <= ' ') s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Key/value lines of a poset file.  Repeated keys accumulate.
struct poset_document {
  std::map<std::string, std::vector<std::string>> fields;

  bool has(const std::string& key) const { return fields.count(key) > 0; }
  const std::vector<std::string>& get(const std::string& key) const {
    static const std::vector<std::string> none;
    auto it = fields.find(key);
    return it == fields.end() ? none : it->second;
  }
};

inline poset_document parse_poset_document(std::string_view text) {
  poset_document doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw error(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'key: values'");
    }
    std::string key(detail::trim(line.substr(0, colon)));
    auto& slot = doc.fields[key];
    for (auto& tok : detail::split_ws(line.substr(colon + 1))) slot.push_back(std::move(tok));
  }
  return doc;
}

inline poset poset_from_document(const poset_document& doc) {
  if (!doc.has("elements")) throw error(errc::parse_error, "missing 'elements:' line");
  std::vector<std::string> names = doc.get("elements");
  for (const auto& n : names) {
    if (!detail::valid_label(n)) throw error(errc::parse_error, "invalid label '" + n + "'");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& tok : doc.get("covers")) {
    auto lt = tok.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size() || tok.find('<', lt + 1) != std::string::npos) {
      throw error(errc::parse_error, "invalid cover '" + tok + "'");
    }
    pairs.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
  }
  return poset::from_covers(std::move(names), pairs);
}

inline poset parse_poset(std::string_view text) { return poset_from_document(parse_poset_document(text)); }

/// Canonical text: elements in index order, covers sorted by index pair.
inline std::string serialize(const poset& p) {
  std::string out = "elements:";
  for (const auto& l : p.labels()) out += " " + l;
  out += "\ncovers:";
  for (auto [a, b] : p.covers()) out += " " + p.label(a) + "<" + p.label(b);
  out += "\n";
  return out;
}

}  // namespace aslkit
