#pragma once

#include <string>
#include <vector>

#include "betti.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "koszul.hpp"
#include "poset.hpp"
#include "topology.hpp"

namespace aslkit {

struct ring_invariants_result {
  int num_vars = 0;
  int dim = 0;
  int depth = 0;
  int reg = 0;
  int pd = 0;
  bool cm = false;
  long long cm_type = 0;
  bool gorenstein = false;
  bool level = false;
  std::vector<long long> h_vector;
  betti_table betti;
  std::string route;

  friend bool operator==(const ring_invariants_result&, const ring_invariants_result&) = default;
};

inline bool is_symmetric(const std::vector<long long>& h) {
  std::size_t n = h.size();
  while (n > 0 && h[n - 1] == 0) --n;
  for (std::size_t k = 0; k < n; ++k) {
    if (h[k] != h[n - 1 - k]) return false;
  }
  return true;
}

/// Invariants read off a Betti table of a quotient of dimension `dim`.
inline ring_invariants_result invariants_from_table(const betti_table& t, int dim) {
  ring_invariants_result r;
  r.num_vars = t.num_vars;
  r.dim = dim;
  r.pd = t.pd();
  r.reg = t.reg();
  r.depth = t.num_vars - r.pd;
  r.cm = r.depth == dim;
  r.cm_type = t.total(r.pd);
  r.gorenstein = r.cm && r.cm_type == 1;
  r.level = r.cm && t.degrees(r.pd).size() == 1;
  r.betti = t;
  return r;
}

/// Invariants of R_K[P] from its Koszul Betti table.  The Cohen-Macaulay
/// property is cross-checked against the order complex.
inline ring_invariants_result ring_invariants(const poset& p, field_kind field = field_kind::rational,
                                              int direct_cap = default_direct_koszul_vars) {
  if (p.empty()) {
    betti_table t;
    t.add(0, 0, 1);
    auto r = invariants_from_table(t, 0);
    r.h_vector = {1};
    r.route = "trivial";
    return r;
  }
  auto kb = koszul_betti_asl(p, direct_cap);
  auto r = invariants_from_table(kb.table, rank(p) + 1);
  r.route = kb.route;
  r.h_vector = compute_fh(order_complex(p)).h;
  if (r.cm != is_cm_poset(p, field)) {
    throw error(errc::consistency_failure, "Cohen-Macaulay test of the ring disagrees with the order complex");
  }
  return r;
}

}  // namespace aslkit
