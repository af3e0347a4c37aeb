#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace aslkit {

inline constexpr std::uint64_t default_node_budget = 2'000'000;

/// Search node cap: ASLKIT_BUDGET when set to a positive integer, else the default.
inline std::uint64_t search_budget(std::uint64_t fallback = default_node_budget) {
  const char* env = std::getenv("ASLKIT_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

}  // namespace aslkit
