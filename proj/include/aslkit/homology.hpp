#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "linalg.hpp"

namespace aslkit {

enum class field_kind { rational, f2, f3, f5 };

inline std::string_view to_string(field_kind f) {
  switch (f) {
    case field_kind::rational: return "q";
    case field_kind::f2: return "f2";
    case field_kind::f3: return "f3";
    case field_kind::f5: return "f5";
  }
  return "?";
}

inline field_kind parse_field(std::string_view s) {
  if (s == "q" || s == "Q" || s == "0") return field_kind::rational;
  if (s == "f2" || s == "2") return field_kind::f2;
  if (s == "f3" || s == "3") return field_kind::f3;
  if (s == "f5" || s == "5") return field_kind::f5;
  throw error(errc::bad_arguments, "unknown field '" + std::string(s) + "' (use q, f2, f3 or f5)");
}

inline int matrix_rank(const std::vector<sparse_row<long long>>& rows, int ncols, field_kind f) {
  switch (f) {
    case field_kind::rational: return rank_rational(rows, ncols);
    case field_kind::f2: return rank_mod<2>(rows, ncols);
    case field_kind::f3: return rank_mod<3>(rows, ncols);
    case field_kind::f5: return rank_mod<5>(rows, ncols);
  }
  return 0;
}

/// dims[i + 1] = dim of reduced homology in degree i, for i = -1..dim.
struct homology_profile {
  field_kind field = field_kind::rational;
  std::vector<long long> dims;

  long long at(int i) const {
    auto k = static_cast<std::size_t>(i + 1);
    return (i < -1 || k >= dims.size()) ? 0 : dims[k];
  }
  bool acyclic() const {
    for (auto d : dims) {
      if (d != 0) return false;
    }
    return true;
  }
};

inline homology_profile reduced_homology(const simplicial_complex& c, field_kind field = field_kind::rational,
                                         std::size_t face_cap = default_face_cap) {
  const int d = c.dim();
  auto faces = c.faces(face_cap);
  std::vector<std::vector<vertex_set>> by_dim(static_cast<std::size_t>(d + 2));
  for (const auto& f : faces) by_dim[static_cast<std::size_t>(f.size())].push_back(f);
  // by_dim[k] holds the (k-1)-dimensional faces.
  std::vector<std::unordered_map<vertex_set, int, vertex_set_hash>> index(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    for (std::size_t j = 0; j < by_dim[k].size(); ++j) index[k].emplace(by_dim[k][j], static_cast<int>(j));
  }
  // rk[k] = rank of the boundary map from faces of size k to size k-1.
  std::vector<int> rk(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    std::vector<sparse_row<long long>> rows;
    rows.reserve(by_dim[k].size());
    for (const auto& f : by_dim[k]) {
      sparse_row<long long> r;
      int j = 0;
      f.for_each([&](int v) {
        vertex_set g = f;
        g.erase(v);
        r.emplace_back(index[k - 1].at(g), (j % 2 == 0) ? 1 : -1);
        ++j;
      });
      std::sort(r.begin(), r.end());
      rows.push_back(std::move(r));
    }
    rk[k] = matrix_rank(rows, static_cast<int>(by_dim[k - 1].size()), field);
  }
  homology_profile h;
  h.field = field;
  long long euler_h = 0;
  long long euler_f = 0;
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    long long dk = static_cast<long long>(by_dim[k].size()) - rk[k] - rk[k + 1];
    h.dims.push_back(dk);
    long long sign = (k % 2 == 1) ? 1 : -1;  // degree k-1
    euler_h += sign * dk;
    euler_f += sign * static_cast<long long>(by_dim[k].size());
  }
  if (euler_h != euler_f) throw error(errc::internal_mismatch, "Euler-Poincare identity violated");
  return h;
}

/// Reduced homology vanishes below the top dimension.
inline bool homology_below_top_vanishes(const simplicial_complex& c, field_kind field) {
  auto h = reduced_homology(c, field);
  for (int i = -1; i < c.dim(); ++i) {
    if (h.at(i) != 0) return false;
  }
  return true;
}

}  // namespace aslkit
