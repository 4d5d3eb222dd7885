#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "mwdp/instance.hpp"
#include "mwdp/rational.hpp"

namespace mwdp {

enum class Method { TrivialAllX1, TrivialAllX2, MinCut, BruteForce, LocalSearch };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::TrivialAllX1: return "trivial_all_x1";
    case Method::TrivialAllX2: return "trivial_all_x2";
    case Method::MinCut: return "mincut";
    case Method::BruteForce: return "brute_force";
    case Method::LocalSearch: return "local_search";
  }
  return "unknown";
}

struct Solution {
  Partition partition;
  Rational weight;
  Method method = Method::BruteForce;
};

inline constexpr std::size_t kDefaultBruteForceCap = 26;
/// Masks are 64-bit; no exhaustive enumeration goes beyond this.
inline constexpr std::size_t kMaxEnumerableVertices = 62;

/// Brute-force cap, honouring the MWDP_CAP environment variable.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("MWDP_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultBruteForceCap;
}

struct SolveOptions {
  std::size_t cap = default_cap();
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t restarts = 16;
};

}  // namespace mwdp
