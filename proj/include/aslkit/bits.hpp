#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace aslkit {

/// Fixed-capacity set of small integers (vertex indices below 128).
class vertex_set {
 public:
  static constexpr int capacity = 128;

  constexpr vertex_set() = default;

  static vertex_set singleton(int v) {
    vertex_set s;
    s.insert(v);
    return s;
  }

  template <class Range>
  static vertex_set of(const Range& r) {
    vertex_set s;
    for (int v : r) s.insert(v);
    return s;
  }

  static vertex_set range(int n) {
    vertex_set s;
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }

  int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }

  bool subset_of(const vertex_set& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  bool intersects(const vertex_set& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }

  /// Smallest element, or -1.
  int front() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < 2; ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        int b = std::countr_zero(x);
        f(k * 64 + b);
        x &= x - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  vertex_set& operator|=(const vertex_set& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  vertex_set& operator&=(const vertex_set& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  vertex_set& operator-=(const vertex_set& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }
  friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
  friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
  friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

  friend bool operator==(const vertex_set&, const vertex_set&) = default;

  /// Colex-style total order on the raw words; only used for canonical sorting.
  friend bool operator<(const vertex_set& a, const vertex_set& b) {
    if (a.w_[1] != b.w_[1]) return a.w_[1] < b.w_[1];
    return a.w_[0] < b.w_[0];
  }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w_[1] + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  std::array<std::uint64_t, 2> w_{};
};

struct vertex_set_hash {
  std::size_t operator()(const vertex_set& s) const { return s.hash(); }
};

/// Growable bitset for relation rows and search states.
class dyn_bitset {
 public:
  dyn_bitset() = default;
  explicit dyn_bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool any() const {
    for (auto x : w_) {
      if (x) return true;
    }
    return false;
  }

  dyn_bitset& operator|=(const dyn_bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  dyn_bitset& operator&=(const dyn_bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  friend bool operator==(const dyn_bitset&, const dyn_bitset&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (auto x : w_) {
      h ^= x;
      h *= 0x100000001B3ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct dyn_bitset_hash {
  std::size_t operator()(const dyn_bitset& s) const { return s.hash(); }
};

}  // namespace aslkit
