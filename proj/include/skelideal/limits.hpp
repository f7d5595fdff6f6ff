#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

namespace skelideal {

/// Work budgets for the enumerating routines. Defaults cover n <= 6, m <= 12.
struct Limits {
  /// Upper bound on candidate exponent vectors (or pairwise products) examined
  /// by a single enumeration, product or intersection.
  std::uint64_t max_candidates = 100'000'000;
  /// Upper bound on the generator count of any intermediate or final ideal.
  std::uint64_t max_generators = 2'000'000;
};

namespace detail {

inline void charge(std::uint64_t amount, std::uint64_t budget, const std::string& what) {
  if (amount > budget) {
    throw ResourceError(what + " needs " + std::to_string(amount) + " > budget " +
                        std::to_string(budget));
  }
}

/// a * b, saturating at UINT64_MAX so budget comparisons stay meaningful.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

}  // namespace detail

}  // namespace skelideal
