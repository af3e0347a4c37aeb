#pragma once

// Sparse Gaussian elimination over exact fields: the rationals (checked
// 64-bit fast path, GMP fallback) and small prime fields.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aslkit {

template <class F>
using sparse_row = std::vector<std::pair<int, F>>;

/// Rational with 64-bit numerator/denominator; throws on overflow so callers
/// can redo the computation with arbitrary precision.
class qsmall {
 public:
  struct overflow : std::exception {};

  qsmall() = default;
  qsmall(long long v) : n_(v), d_(1) {}  // NOLINT(google-explicit-constructor)

  static qsmall make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw overflow{};
    qsmall q;
    q.n_ = static_cast<std::int64_t>(n);
    q.d_ = static_cast<std::int64_t>(d);
    return q;
  }

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }
  bool is_zero() const { return n_ == 0; }

  friend qsmall operator+(const qsmall& a, const qsmall& b) {
    if (a.d_ == 1 && b.d_ == 1) return make(__int128(a.n_) + b.n_, 1);
    return make(__int128(a.n_) * b.d_ + __int128(b.n_) * a.d_, __int128(a.d_) * b.d_);
  }
  friend qsmall operator-(const qsmall& a, const qsmall& b) {
    if (a.d_ == 1 && b.d_ == 1) return make(__int128(a.n_) - b.n_, 1);
    return make(__int128(a.n_) * b.d_ - __int128(b.n_) * a.d_, __int128(a.d_) * b.d_);
  }
  friend qsmall operator*(const qsmall& a, const qsmall& b) {
    return make(__int128(a.n_) * b.n_, __int128(a.d_) * b.d_);
  }
  friend qsmall operator/(const qsmall& a, const qsmall& b) {
    return make(__int128(a.n_) * b.d_, __int128(a.d_) * b.n_);
  }
  qsmall operator-() const {
    qsmall q = *this;
    q.n_ = -q.n_;
    return q;
  }
  friend bool operator==(const qsmall&, const qsmall&) = default;

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

/// Element of the prime field F_p, with p fixed at compile time.
template <std::uint32_t P>
class fp {
 public:
  fp() = default;
  fp(long long v) {  // NOLINT(google-explicit-constructor)
    long long r = v % static_cast<long long>(P);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  bool is_zero() const { return v_ == 0; }
  std::uint32_t value() const { return v_; }

  friend fp operator+(fp a, fp b) { return raw((a.v_ + b.v_) % P); }
  friend fp operator-(fp a, fp b) { return raw((a.v_ + P - b.v_) % P); }
  friend fp operator*(fp a, fp b) {
    return raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % P));
  }
  friend fp operator/(fp a, fp b) { return a * b.inverse(); }
  fp operator-() const { return raw((P - v_) % P); }
  friend bool operator==(fp, fp) = default;

  fp inverse() const {
    std::uint64_t result = 1;
    std::uint64_t base = v_;
    std::uint32_t e = P - 2;
    while (e) {
      if (e & 1U) result = (result * base) % P;
      base = (base * base) % P;
      e >>= 1U;
    }
    return raw(static_cast<std::uint32_t>(result));
  }

 private:
  static fp raw(std::uint32_t v) {
    fp x;
    x.v_ = v;
    return x;
  }
  std::uint32_t v_ = 0;
};

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline bool is_zero(const qsmall& q) { return q.is_zero(); }
template <std::uint32_t P>
bool is_zero(const fp<P>& x) {
  return x.is_zero();
}

/// a - c*b for sorted sparse rows, dropping cancellations.
template <class F>
sparse_row<F> axpy(const sparse_row<F>& a, const F& c, const sparse_row<F>& b) {
  sparse_row<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      F v = a[i].second - c * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Row echelon form built one row at a time.  Stored rows have leading
/// coefficient one and pairwise distinct leading columns.
template <class F>
class echelon {
 public:
  explicit echelon(int ncols) : pivot_(static_cast<std::size_t>(ncols), -1) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return static_cast<int>(pivot_.size()); }
  bool is_pivot(int col) const { return pivot_[static_cast<std::size_t>(col)] >= 0; }

  /// Eliminates every pivot column from `r`.
  void reduce(sparse_row<F>& r) const {
    std::size_t pos = 0;
    while (pos < r.size()) {
      int p = pivot_[static_cast<std::size_t>(r[pos].first)];
      if (p < 0) {
        ++pos;
        continue;
      }
      F c = r[pos].second;
      sparse_row<F> head(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
      sparse_row<F> tail(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
      tail = axpy(tail, c, rows_[static_cast<std::size_t>(p)]);
      head.insert(head.end(), tail.begin(), tail.end());
      r = std::move(head);
    }
  }

  /// Returns true when the row is independent of the stored ones.
  bool insert(sparse_row<F> r) {
    while (!r.empty()) {
      int p = pivot_[static_cast<std::size_t>(r.front().first)];
      if (p < 0) break;
      F c = r.front().second;
      r = axpy(r, c, rows_[static_cast<std::size_t>(p)]);
    }
    if (r.empty()) return false;
    F lead = r.front().second;
    for (auto& e : r) e.second = e.second / lead;
    pivot_[static_cast<std::size_t>(r.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  std::vector<int> pivot_;
  std::vector<sparse_row<F>> rows_;
};

template <class F>
int rank_of(std::vector<sparse_row<F>> rows, int ncols) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  echelon<F> e(ncols);
  for (auto& r : rows) {
    e.insert(std::move(r));
    if (e.rank() == ncols) break;
  }
  return e.rank();
}

inline bool fits_small(const mpq_class& q) {
  return q.get_num().fits_slong_p() && q.get_den().fits_slong_p();
}

/// Exact rank over Q.  Uses checked 64-bit arithmetic first and falls back to
/// GMP when an intermediate value overflows.
inline int rank_rational(const std::vector<sparse_row<mpq_class>>& rows, int ncols) {
  bool small = true;
  for (const auto& r : rows) {
    for (const auto& e : r) {
      if (!fits_small(e.second)) {
        small = false;
        break;
      }
    }
    if (!small) break;
  }
  if (small) {
    try {
      std::vector<sparse_row<qsmall>> q;
      q.reserve(rows.size());
      for (const auto& r : rows) {
        sparse_row<qsmall> s;
        s.reserve(r.size());
        for (const auto& e : r) {
          s.emplace_back(e.first,
                         qsmall::make(e.second.get_num().get_si(), e.second.get_den().get_si()));
        }
        q.push_back(std::move(s));
      }
      return rank_of(std::move(q), ncols);
    } catch (const qsmall::overflow&) {
    }
  }
  return rank_of(rows, ncols);
}

/// Exact rank of an integer matrix over Q.
inline int rank_rational(const std::vector<sparse_row<long long>>& rows, int ncols) {
  try {
    std::vector<sparse_row<qsmall>> q;
    q.reserve(rows.size());
    for (const auto& r : rows) {
      sparse_row<qsmall> s;
      s.reserve(r.size());
      for (const auto& e : r) s.emplace_back(e.first, qsmall(e.second));
      q.push_back(std::move(s));
    }
    return rank_of(std::move(q), ncols);
  } catch (const qsmall::overflow&) {
  }
  std::vector<sparse_row<mpq_class>> q;
  for (const auto& r : rows) {
    sparse_row<mpq_class> s;
    for (const auto& e : r) s.emplace_back(e.first, mpq_class(static_cast<long>(e.second)));
    q.push_back(std::move(s));
  }
  return rank_of(std::move(q), ncols);
}

template <std::uint32_t P>
int rank_mod(const std::vector<sparse_row<long long>>& rows, int ncols) {
  std::vector<sparse_row<fp<P>>> q;
  q.reserve(rows.size());
  for (const auto& r : rows) {
    sparse_row<fp<P>> s;
    for (const auto& e : r) {
      fp<P> v(e.second);
      if (!v.is_zero()) s.emplace_back(e.first, v);
    }
    q.push_back(std::move(s));
  }
  return rank_of(std::move(q), ncols);
}

}  // namespace aslkit
