#pragma once

// Simple undirected graphs, chordality by maximum-cardinality search, and
// chordless-cycle witnesses.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace aslkit {

class graph {
 public:
  graph() = default;
  explicit graph(int n) : adj_(static_cast<std::size_t>(n), dyn_bitset(static_cast<std::size_t>(n))) {}

  int size() const { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v) {
    if (u == v) throw error(errc::bad_arguments, "self-loop in simple graph");
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }
  const dyn_bitset& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
      for (int v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  graph induced(const std::vector<int>& vs) const {
    graph g(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (adjacent(vs[a], vs[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
    return g;
  }

  friend bool operator==(const graph&, const graph&) = default;

 private:
  std::vector<dyn_bitset> adj_;
};

/// Maximum-cardinality search.  Returns the visit order; its reverse is a
/// perfect elimination ordering iff the graph is chordal.
inline std::vector<int> maximum_cardinality_search(const graph& g) {
  const int n = g.size();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!done[static_cast<std::size_t>(v)] &&
          (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    g.neighbours(best).for_each([&](std::size_t u) {
      if (!done[u]) ++weight[u];
    });
  }
  return order;
}

/// Checks that `elim` is a perfect elimination ordering: for every vertex, its
/// neighbours eliminated later form a clique.
inline bool is_perfect_elimination_ordering(const graph& g, const std::vector<int>& elim) {
  const int n = g.size();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(elim[static_cast<std::size_t>(k)])] = k;
  for (int v : elim) {
    std::vector<int> later;
    g.neighbours(v).for_each([&](std::size_t u) {
      if (pos[u] > pos[static_cast<std::size_t>(v)]) later.push_back(static_cast<int>(u));
    });
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

inline bool is_chordal(const graph& g) {
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

namespace detail {

// Extends an induced path; `path` always starts at its smallest vertex.
inline bool extend_induced_path(const graph& g, std::vector<int>& path, int target_len,
                                std::vector<char>& on_path) {
  const int start = path.front();
  const int last = path.back();
  const int len = static_cast<int>(path.size());
  if (len == target_len) {
    return g.adjacent(last, start) && path[1] < last;
  }
  bool found = false;
  g.neighbours(last).for_each([&](std::size_t uu) {
    if (found) return;
    int u = static_cast<int>(uu);
    if (u <= start || on_path[uu]) return;
    // u may touch only `last` among interior path vertices, and touches
    // `start` exactly when it closes the cycle.
    for (int k = 1; k + 1 < len; ++k) {
      if (g.adjacent(u, path[static_cast<std::size_t>(k)])) return;
    }
    if (len >= 2 && g.adjacent(u, start) != (len + 1 == target_len)) return;
    on_path[uu] = 1;
    path.push_back(u);
    found = extend_induced_path(g, path, target_len, on_path);
    if (!found) {
      path.pop_back();
      on_path[uu] = 0;
    }
  });
  return found;
}

}  // namespace detail

/// Shortest induced cycle of length at least four, if any.
inline std::optional<std::vector<int>> chordless_cycle(const graph& g) {
  const int n = g.size();
  for (int len = 4; len <= n; ++len) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> path{s};
      std::vector<char> on_path(static_cast<std::size_t>(n), 0);
      on_path[static_cast<std::size_t>(s)] = 1;
      if (detail::extend_induced_path(g, path, len, on_path)) return path;
    }
  }
  return std::nullopt;
}

/// True when `cycle` is an induced cycle of `g` of length at least four.
inline bool is_chordless_cycle(const graph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
      if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace aslkit
