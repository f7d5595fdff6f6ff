#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's enumeration, reduction or power routines; exponent
// vectors are plain std::vector<unsigned>.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<unsigned>;

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Every k-subset of {0..n-1}, via bitmasks.
inline std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    std::vector<unsigned> s;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

/// Every c-subset of coordinates sums to at least m.
inline bool symbolic_member(unsigned c, unsigned m, const Vec& a) {
  for (const auto& s : subsets(static_cast<unsigned>(a.size()), c)) {
    unsigned sum = 0;
    for (auto i : s) sum += a[i];
    if (sum < m) return false;
  }
  return true;
}

/// All vectors in [0, cap]^len.
inline std::vector<Vec> box(std::size_t len, unsigned cap) {
  std::vector<Vec> out;
  Vec v(len, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      out.push_back(v);
      return;
    }
    for (unsigned e = 0; e <= cap; ++e) {
      v[pos] = e;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

/// Minimal elements under divisibility, by pairwise comparison.
inline std::set<Vec> minimal_elements(const std::vector<Vec>& xs) {
  std::set<Vec> out;
  for (const auto& x : xs) {
    bool minimal = true;
    for (const auto& y : xs) {
      if (y != x && divides(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(x);
  }
  return out;
}

/// Minimal generators of I^(m)(n,c) by scanning the whole box [0,m]^{n+1}.
inline std::set<Vec> symbolic_generators(unsigned n, unsigned c, unsigned m) {
  std::vector<Vec> members;
  for (const auto& v : box(n + 1, m)) {
    if (symbolic_member(c, m, v)) members.push_back(v);
  }
  return minimal_elements(members);
}

/// Squarefree generators of I(n,c).
inline std::vector<Vec> simplicial_generators(unsigned n, unsigned c) {
  std::vector<Vec> out;
  for (const auto& s : subsets(n + 1, n + 2 - c)) {
    Vec v(n + 1, 0);
    for (auto i : s) v[i] = 1;
    out.push_back(v);
  }
  return out;
}

/// a ∈ I^r for I generated by `gens`: peel off one generator at a time.
inline bool power_member(const std::vector<Vec>& gens, unsigned r, const Vec& a) {
  if (r == 0) return true;
  for (const auto& g : gens) {
    if (!divides(g, a)) continue;
    Vec rest(a);
    for (std::size_t i = 0; i < a.size(); ++i) rest[i] -= g[i];
    if (power_member(gens, r - 1, rest)) return true;
  }
  return false;
}

/// Decides I^(m)(n,c) ⊆ I^r(n,c) using only the functions above.
inline bool containment(unsigned n, unsigned c, unsigned m, unsigned r) {
  const auto base = simplicial_generators(n, c);
  for (const auto& g : symbolic_generators(n, c, m)) {
    if (!power_member(base, r, g)) return false;
  }
  return true;
}

}  // namespace oracle
