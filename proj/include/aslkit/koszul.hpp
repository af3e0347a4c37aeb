#pragma once

// Graded Betti numbers from Koszul homology.  A graded module M over
// K[x_0..x_{m-1}] is given by bases of its homogeneous pieces and the action
// of each variable; beta_{i,j} = dim H_i(K(x) (x) M)_j.  The complex splits
// along any finer grading under which the action is homogeneous.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "poset.hpp"
#include "straightening.hpp"
#include "topology.hpp"

namespace aslkit {

using weight_vector = std::vector<int>;

/// Finitely generated graded module, presented by bases of its pieces.
class graded_module {
 public:
  virtual ~graded_module() = default;
  virtual int num_vars() const = 0;
  /// Dimension of the degree-d piece; degrees above top_degree() are zero
  /// when top_degree() >= 0.
  virtual int dim(int d) const = 0;
  virtual int top_degree() const { return -1; }
  /// Fine weight of a basis element and of a variable.
  virtual weight_vector weight(int d, int idx) const = 0;
  virtual weight_vector var_weight(int v) const = 0;
  /// x_v * basis element as a combination of the degree-(d+1) basis.
  virtual sparse_row<mpq_class> act(int v, int d, int idx) const = 0;
};

namespace detail {

inline weight_vector add_weights(const weight_vector& a, const weight_vector& b) {
  weight_vector c(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
  return c;
}

struct weight_hash {
  std::size_t operator()(const weight_vector& w) const {
    std::size_t h = 0xCBF29CE484222325ULL;
    for (int x : w) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001B3ULL;
    return h;
  }
};

inline std::vector<std::uint32_t> subsets_of_size(int m, int i) {
  std::vector<std::uint32_t> out;
  if (i > m) return out;
  if (i == 0) return {0U};
  std::uint32_t s = (1U << i) - 1U;
  const std::uint32_t limit = 1U << m;
  while (s < limit) {
    out.push_back(s);
    std::uint32_t c = s & (~s + 1U);
    std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace detail

struct koszul_options {
  int reg_bound = 0;    // compute j - i in [0, reg_bound]
  int max_vars = 24;
  int degree_cap = -1;  // when set below reg_bound, stop there and report
};

/// Raised when the degree window was truncated; carries the partial table.
class degree_bound_exceeded : public error {
 public:
  degree_bound_exceeded(betti_table partial, int bound, int needed)
      : error(errc::degree_bound_exceeded, "computed j - i <= " + std::to_string(bound) + " of " +
                                               std::to_string(needed) + "\n" + to_text(partial)),
        partial_(std::move(partial)),
        bound_(bound) {}

  const betti_table& partial() const { return partial_; }
  int bound() const { return bound_; }

 private:
  betti_table partial_;
  int bound_;
};

/// Betti table of M restricted to the window j - i <= reg_bound.
inline betti_table koszul_betti(const graded_module& mod, const koszul_options& opt) {
  const int m = mod.num_vars();
  if (m > opt.max_vars || m > 30) throw error(errc::size_cap_exceeded, "Koszul complex capped at " + std::to_string(opt.max_vars) + " variables");
  int tmax = opt.reg_bound;
  const bool truncated = opt.degree_cap >= 0 && opt.degree_cap < tmax &&
                         (mod.top_degree() < 0 || opt.degree_cap < mod.top_degree());
  if (truncated) tmax = opt.degree_cap;
  if (mod.top_degree() >= 0) tmax = std::min(tmax, mod.top_degree());
  std::vector<weight_vector> vw(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) vw[static_cast<std::size_t>(v)] = mod.var_weight(v);

  // r[i][t]: rank of  K_i (x) M_t -> K_{i-1} (x) M_{t+1}.
  std::vector<std::vector<long long>> r(static_cast<std::size_t>(m + 2),
                                        std::vector<long long>(static_cast<std::size_t>(tmax + 2), 0));
  std::vector<std::vector<long long>> dimk(static_cast<std::size_t>(m + 2),
                                           std::vector<long long>(static_cast<std::size_t>(tmax + 2), 0));
  std::vector<std::vector<std::uint32_t>> subsets(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) subsets[static_cast<std::size_t>(i)] = detail::subsets_of_size(m, i);

  for (int t = 0; t <= tmax; ++t) {
    const int dt = mod.dim(t);
    const int dt1 = mod.dim(t + 1);
    // Action of each variable on M_t, computed once.
    std::vector<std::vector<sparse_row<mpq_class>>> action(static_cast<std::size_t>(m));
    for (int v = 0; v < m && t + 1 <= tmax + 1; ++v) {
      auto& av = action[static_cast<std::size_t>(v)];
      av.reserve(static_cast<std::size_t>(dt));
      for (int b = 0; b < dt; ++b) av.push_back(mod.act(v, t, b));
    }
    std::vector<weight_vector> bw(static_cast<std::size_t>(dt));
    for (int b = 0; b < dt; ++b) bw[static_cast<std::size_t>(b)] = mod.weight(t, b);
    for (int i = 0; i <= m; ++i) {
      const auto& subs = subsets[static_cast<std::size_t>(i)];
      dimk[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
          static_cast<long long>(subs.size()) * dt;
      if (i == 0 || dt == 0 || dt1 == 0) continue;
      // Codomain index: subset rank among (i-1)-subsets times dt1 + basis index.
      std::unordered_map<std::uint32_t, int> sub_index;
      const auto& lower = subsets[static_cast<std::size_t>(i - 1)];
      for (std::size_t k = 0; k < lower.size(); ++k) sub_index.emplace(lower[k], static_cast<int>(k));
      std::unordered_map<weight_vector, std::vector<sparse_row<mpq_class>>, detail::weight_hash> blocks;
      for (auto s : subs) {
        weight_vector sw;
        for (int v = 0; v < m; ++v) {
          if ((s >> v) & 1U) sw = detail::add_weights(sw, vw[static_cast<std::size_t>(v)]);
        }
        for (int b = 0; b < dt; ++b) {
          sparse_row<mpq_class> row;
          int sign_pos = 0;
          for (int v = 0; v < m; ++v) {
            if (!((s >> v) & 1U)) continue;
            const int base = sub_index.at(s & ~(1U << v)) * dt1;
            const bool neg = (sign_pos % 2) == 1;
            for (const auto& [col, c] : action[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)]) {
              row.emplace_back(base + col, neg ? mpq_class(-c) : c);
            }
            ++sign_pos;
          }
          if (row.empty()) continue;
          std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          blocks[detail::add_weights(sw, bw[static_cast<std::size_t>(b)])].push_back(std::move(row));
        }
      }
      long long total = 0;
      const int ncols = static_cast<int>(lower.size()) * dt1;
      for (auto& [w, rows] : blocks) {
        (void)w;
        total += rank_rational(rows, ncols);
      }
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = total;
    }
  }
  betti_table out;
  out.num_vars = m;
  for (int i = 0; i <= m; ++i) {
    for (int t = 0; t <= tmax; ++t) {
      long long b = dimk[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] -
                    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] -
                    (t > 0 ? r[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(t - 1)] : 0);
      out.add(i, i + t, b);
    }
  }
  if (truncated) throw degree_bound_exceeded(out, tmax, opt.reg_bound);
  return out;
}

// ---------------------------------------------------------------------------
// Modules.

/// S / I_Delta, with the exponent-vector grading.
class face_ring_module : public graded_module {
 public:
  explicit face_ring_module(const simplicial_complex& c) : c_(c) {}

  int num_vars() const override { return c_.universe_size(); }
  int dim(int d) const override { return static_cast<int>(basis(d).size()); }
  weight_vector weight(int d, int idx) const override {
    weight_vector w(static_cast<std::size_t>(num_vars()), 0);
    for (int v : basis(d)[static_cast<std::size_t>(idx)].vars) ++w[static_cast<std::size_t>(v)];
    return w;
  }
  weight_vector var_weight(int v) const override {
    weight_vector w(static_cast<std::size_t>(num_vars()), 0);
    w[static_cast<std::size_t>(v)] = 1;
    return w;
  }
  sparse_row<mpq_class> act(int v, int d, int idx) const override {
    monomial m = basis(d)[static_cast<std::size_t>(idx)] * monomial({v});
    const auto& next = index(d + 1);
    auto it = next.find(m);
    if (it == next.end()) return {};
    return {{it->second, mpq_class(1)}};
  }

  const std::vector<monomial>& basis(int d) const {
    ensure(d);
    return basis_[static_cast<std::size_t>(d)];
  }

 private:
  const std::map<monomial, int>& index(int d) const {
    ensure(d);
    return index_[static_cast<std::size_t>(d)];
  }

  void ensure(int d) const {
    while (static_cast<int>(basis_.size()) <= d) {
      const int k = static_cast<int>(basis_.size());
      std::vector<monomial> b;
      std::vector<int> cur;
      auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
          vertex_set s = vertex_set::of(cur);
          if (c_.contains(s)) b.emplace_back(cur);
          return;
        }
        for (int v = from; v < num_vars(); ++v) {
          cur.push_back(v);
          vertex_set s = vertex_set::of(cur);
          if (c_.contains(s)) self(self, v);
          cur.pop_back();
        }
      };
      rec(rec, 0);
      std::sort(b.begin(), b.end());
      std::map<monomial, int> idx;
      for (std::size_t k2 = 0; k2 < b.size(); ++k2) idx.emplace(b[k2], static_cast<int>(k2));
      basis_.push_back(std::move(b));
      index_.push_back(std::move(idx));
    }
  }

  const simplicial_complex& c_;
  mutable std::vector<std::vector<monomial>> basis_;
  mutable std::vector<std::map<monomial, int>> index_;
};

namespace detail {

/// Indicator of the join-irreducible elements below each element.
inline std::vector<weight_vector> join_irreducible_weights(const poset& p) {
  std::vector<int> ji;
  for (int x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).size() == 1) ji.push_back(x);
  }
  std::vector<weight_vector> w(static_cast<std::size_t>(p.size()), weight_vector(ji.size(), 0));
  for (int x = 0; x < p.size(); ++x) {
    for (std::size_t k = 0; k < ji.size(); ++k) {
      if (p.leq(ji[k], x)) w[static_cast<std::size_t>(x)][k] = 1;
    }
  }
  return w;
}

}  // namespace detail

/// R_K[P] = K[x_p] / J_P with the standard-monomial basis.  Graded by the
/// join-irreducibles below each element, under which J_P is homogeneous.
class asl_module : public graded_module {
 public:
  explicit asl_module(const poset& p)
      : j_(straightening_generators(p)), nf_(j_), w_(detail::join_irreducible_weights(j_.p)) {
    for (const auto& g : j_.generators) {
      weight_vector first;
      bool have = false;
      for (const auto& [m, c] : g.f.terms()) {
        (void)c;
        weight_vector wm = monomial_weight(m);
        if (have && wm != first) throw error(errc::internal_mismatch, "straightening relation is not homogeneous");
        first = wm;
        have = true;
      }
    }
  }

  asl_module(const asl_module&) = delete;
  asl_module& operator=(const asl_module&) = delete;

  const straightening_ideal& ideal() const { return j_; }
  const normal_former& normal_forms() const { return nf_; }

  int num_vars() const override { return j_.num_vars(); }
  int dim(int d) const override { return static_cast<int>(basis(d).size()); }
  weight_vector weight(int d, int idx) const override {
    weight_vector w = monomial_weight(basis(d)[static_cast<std::size_t>(idx)]);
    w.push_back(d);
    return w;
  }
  weight_vector var_weight(int v) const override {
    weight_vector w = w_[static_cast<std::size_t>(j_.element(v))];
    w.push_back(1);
    return w;
  }
  sparse_row<mpq_class> act(int v, int d, int idx) const override {
    return coordinates(d + 1, nf_.of(basis(d)[static_cast<std::size_t>(idx)] * monomial({v})));
  }

  const std::vector<monomial>& basis(int d) const {
    ensure(d);
    return basis_[static_cast<std::size_t>(d)];
  }

  /// Coordinates of a normal form in the degree-d basis.
  sparse_row<mpq_class> coordinates(int d, const polynomial& f) const {
    ensure(d);
    sparse_row<mpq_class> row;
    for (const auto& [m, c] : f.terms()) row.emplace_back(index_[static_cast<std::size_t>(d)].at(m), c);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
  }

  weight_vector monomial_weight(const monomial& m) const {
    weight_vector w(w_.empty() ? 0 : w_.front().size(), 0);
    for (int v : m.vars) w = detail::add_weights(w, w_[static_cast<std::size_t>(j_.element(v))]);
    return w;
  }

 private:
  void ensure(int d) const {
    while (static_cast<int>(basis_.size()) <= d) {
      auto b = standard_monomials(j_, static_cast<int>(basis_.size()));
      std::map<monomial, int> idx;
      for (std::size_t k = 0; k < b.size(); ++k) idx.emplace(b[k], static_cast<int>(k));
      basis_.push_back(std::move(b));
      index_.push_back(std::move(idx));
    }
  }

  straightening_ideal j_;
  normal_former nf_;
  std::vector<weight_vector> w_;
  mutable std::vector<std::vector<monomial>> basis_;
  mutable std::vector<std::map<monomial, int>> index_;
};

/// A = R / (theta_0, ..., theta_r) for a Cohen-Macaulay R_K[P] on a pure P,
/// with theta_k the sum of the variables of rank k.  The first variable of
/// each rank is eliminated, so A is a module over the remaining variables.
/// Constructed only when dim A_k = h_k for all k, which certifies that the
/// thetas form a regular sequence; then Betti numbers of A over the smaller
/// ring equal those of R.
class artinian_reduction : public graded_module {
 public:
  artinian_reduction(const asl_module& r, const std::vector<long long>& h) : r_(r) {
    const auto& j = r.ideal();
    const poset& p = j.p;
    auto rk = ranks(p);
    const int top = *std::max_element(rk.begin(), rk.end());
    std::vector<std::vector<int>> by_rank(static_cast<std::size_t>(top + 1));
    for (int v = 0; v < j.num_vars(); ++v) by_rank[static_cast<std::size_t>(rk[static_cast<std::size_t>(j.element(v))])].push_back(v);
    std::vector<char> eliminated(static_cast<std::size_t>(j.num_vars()), 0);
    for (const auto& group : by_rank) {
      if (group.empty()) throw error(errc::bad_arguments, "rank level without elements");
      thetas_.push_back(group);
      eliminated[static_cast<std::size_t>(group.front())] = 1;
    }
    for (int v = 0; v < j.num_vars(); ++v) {
      if (!eliminated[static_cast<std::size_t>(v)]) kept_.push_back(v);
    }
    rank_of_var_.assign(static_cast<std::size_t>(j.num_vars()), 0);
    for (int v = 0; v < j.num_vars(); ++v) rank_of_var_[static_cast<std::size_t>(v)] = rk[static_cast<std::size_t>(j.element(v))];
    // Degree-k piece: R_k modulo theta * R_{k-1}.
    for (int k = 0;; ++k) {
      const int n = r.dim(k);
      echelon<mpq_class> e(n);
      if (k > 0) {
        for (int b = 0; b < r.dim(k - 1); ++b) {
          for (const auto& group : thetas_) {
            polynomial f;
            for (int v : group) f += r.normal_forms().of(r.basis(k - 1)[static_cast<std::size_t>(b)] * monomial({v}));
            e.insert(r.coordinates(k, f));
            if (e.rank() == n) break;
          }
          if (e.rank() == n) break;
        }
      }
      std::vector<int> free_cols;
      for (int c = 0; c < n; ++c) {
        if (!e.is_pivot(c)) free_cols.push_back(c);
      }
      const long long expect = k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : 0;
      if (static_cast<long long>(free_cols.size()) != expect) {
        throw error(errc::internal_mismatch, "Artinian reduction: dim A_" + std::to_string(k) + " = " +
                                                 std::to_string(free_cols.size()) + " but h_" + std::to_string(k) +
                                                 " = " + std::to_string(expect));
      }
      pieces_.push_back(std::move(e));
      free_.push_back(std::move(free_cols));
      if (expect == 0) break;
    }
    top_ = static_cast<int>(free_.size()) - 2;
  }

  int num_vars() const override { return static_cast<int>(kept_.size()); }
  int dim(int d) const override {
    return (d < 0 || d >= static_cast<int>(free_.size())) ? 0 : static_cast<int>(free_[static_cast<std::size_t>(d)].size());
  }
  int top_degree() const override { return top_; }
  /// Graded by the sum of element ranks, under which J_P and the thetas are
  /// homogeneous.
  weight_vector weight(int d, int idx) const override {
    const monomial& m = r_.basis(d)[static_cast<std::size_t>(free_[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx)])];
    int s = 0;
    for (int v : m.vars) s += rank_of_var_[static_cast<std::size_t>(v)];
    return {d, s};
  }
  weight_vector var_weight(int v) const override { return {1, rank_of_var_[static_cast<std::size_t>(kept_[static_cast<std::size_t>(v)])]}; }
  sparse_row<mpq_class> act(int v, int d, int idx) const override {
    if (d + 1 >= static_cast<int>(free_.size())) return {};
    const int col = free_[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx)];
    const monomial& m = r_.basis(d)[static_cast<std::size_t>(col)];
    auto row = r_.coordinates(d + 1, r_.normal_forms().of(m * monomial({kept_[static_cast<std::size_t>(v)]})));
    pieces_[static_cast<std::size_t>(d + 1)].reduce(row);
    const auto& fc = free_[static_cast<std::size_t>(d + 1)];
    sparse_row<mpq_class> out;
    for (auto& [c, val] : row) {
      auto it = std::lower_bound(fc.begin(), fc.end(), c);
      out.emplace_back(static_cast<int>(it - fc.begin()), val);
    }
    return out;
  }

 private:
  const asl_module& r_;
  std::vector<std::vector<int>> thetas_;
  std::vector<int> kept_;
  std::vector<int> rank_of_var_;
  std::vector<echelon<mpq_class>> pieces_;
  std::vector<std::vector<int>> free_;
  int top_ = 0;
};

// ---------------------------------------------------------------------------
// Entry points.

inline constexpr int default_direct_koszul_vars = 10;

/// Betti table of S / I_Delta, with reg <= dim Delta + 1.
inline betti_table koszul_betti(const simplicial_complex& c, int degree_cap = -1) {
  face_ring_module m(c);
  koszul_options opt;
  opt.reg_bound = c.dim() + 1;
  opt.degree_cap = degree_cap;
  return koszul_betti(m, opt);
}

struct asl_betti_result {
  betti_table table;
  std::string route;  // "direct", "artinian" or "trivial"
};

/// Betti table of R_K[P].  Up to `direct_cap` variables the Koszul complex of
/// R itself is used, with the degree window bounded by the regularity of the
/// initial ideal; larger Cohen-Macaulay orders go through the Artinian
/// reduction.
inline asl_betti_result koszul_betti_asl(const poset& p, int direct_cap = default_direct_koszul_vars,
                                         int degree_cap = -1) {
  asl_betti_result res;
  if (p.empty()) {
    res.table.num_vars = 0;
    res.table.add(0, 0, 1);
    res.route = "trivial";
    return res;
  }
  auto delta = order_complex(p);
  if (p.size() <= direct_cap) {
    asl_module r(p);
    koszul_options opt;
    opt.reg_bound = hochster_regularity(delta).reg;
    opt.max_vars = direct_cap;
    opt.degree_cap = degree_cap;
    res.table = koszul_betti(r, opt);
    res.route = "direct";
    return res;
  }
  if (!is_pure(p) || !is_cm_poset(p)) {
    throw error(errc::size_cap_exceeded, "Koszul route for non-Cohen-Macaulay orders capped at " +
                                             std::to_string(direct_cap) + " elements");
  }
  asl_module r(p);
  artinian_reduction a(r, compute_fh(delta).h);
  koszul_options opt;
  opt.reg_bound = a.top_degree();
  opt.degree_cap = degree_cap;
  res.table = koszul_betti(a, opt);
  res.table.num_vars = p.size();
  res.route = "artinian";
  return res;
}

}  // namespace aslkit
