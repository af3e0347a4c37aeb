#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace aslkit {

/// Monomial as the ascending multiset of its variable indices.  Variables are
/// ordered x_0 < x_1 < ...; comparison is degree reverse lexicographic.
struct monomial {
  std::vector<int> vars;

  monomial() = default;
  explicit monomial(std::vector<int> v) : vars(std::move(v)) { std::sort(vars.begin(), vars.end()); }

  int degree() const { return static_cast<int>(vars.size()); }

  /// For equal degrees, comparing the ascending lists lexicographically is
  /// degree reverse lexicographic order.
  friend bool operator<(const monomial& a, const monomial& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
  }
  friend bool operator>(const monomial& a, const monomial& b) { return b < a; }
  friend bool operator==(const monomial&, const monomial&) = default;

  friend monomial operator*(const monomial& a, const monomial& b) {
    monomial m;
    m.vars.resize(a.vars.size() + b.vars.size());
    std::merge(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), m.vars.begin());
    return m;
  }

  bool divisible_by(const monomial& d) const {
    return std::includes(vars.begin(), vars.end(), d.vars.begin(), d.vars.end());
  }

  /// this / d; requires divisibility.
  monomial quotient(const monomial& d) const {
    monomial m;
    std::set_difference(vars.begin(), vars.end(), d.vars.begin(), d.vars.end(), std::back_inserter(m.vars));
    return m;
  }

  friend monomial lcm(const monomial& a, const monomial& b) {
    monomial m;
    std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), std::back_inserter(m.vars));
    return m;
  }

  friend bool coprime(const monomial& a, const monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.vars.size() && j < b.vars.size()) {
      if (a.vars[i] == b.vars[j]) return false;
      if (a.vars[i] < b.vars[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return true;
  }
};

/// Polynomial with exact rational coefficients; iteration starts at the
/// leading term.
class polynomial {
 public:
  using term_map = std::map<monomial, mpq_class, std::greater<monomial>>;

  polynomial() = default;
  polynomial(const monomial& m, const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace(m, c);
  }

  bool is_zero() const { return terms_.empty(); }
  const term_map& terms() const { return terms_; }
  const monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const monomial& m, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  polynomial& operator+=(const polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  polynomial& operator-=(const polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
  friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

  /// c * m * this.
  polynomial scaled(const monomial& m, const mpq_class& c) const {
    polynomial out;
    for (const auto& [t, d] : terms_) out.terms_.emplace(t * m, d * c);
    return out;
  }

  friend bool operator==(const polynomial& a, const polynomial& b) { return a.terms_ == b.terms_; }

 private:
  term_map terms_;
};

/// `c * x_a*x_b` terms, leading term first, with variable names from `name`.
template <class Name>
std::string format_polynomial(const polynomial& f, Name&& name) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += a.get_str() + " * ";
    if (m.vars.empty()) out += "1";
    for (std::size_t k = 0; k < m.vars.size(); ++k) {
      if (k) out += "*";
      out += "x_" + name(m.vars[k]);
    }
    first = false;
  }
  return out;
}

}  // namespace aslkit
