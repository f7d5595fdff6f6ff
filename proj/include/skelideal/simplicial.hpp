#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "limits.hpp"
#include "monomial.hpp"

namespace skelideal {

/// Names the simplicial ideal I(n, c): the ideal of the union of all
/// codimension-c faces of the coordinate simplex in P^n.
class SimplicialSpec {
 public:
  SimplicialSpec(unsigned n, unsigned c) : n_(n), c_(c) {
    if (n < 1) throw ParameterError("n must be >= 1");
    if (c < 1 || c > n) {
      throw ParameterError("c must satisfy 1 <= c <= n (got n=" + std::to_string(n) +
                           ", c=" + std::to_string(c) + ")");
    }
  }

  unsigned n() const noexcept { return n_; }
  unsigned c() const noexcept { return c_; }
  std::size_t num_vars() const noexcept { return n_ + 1; }
  /// Degree n + 2 - c of the squarefree generators.
  unsigned generator_degree() const noexcept { return n_ + 2 - c_; }

  friend bool operator==(const SimplicialSpec&, const SimplicialSpec&) = default;

 private:
  unsigned n_;
  unsigned c_;
};

/// The prime of one codimension-c face: generated by the c variables whose
/// coordinate hyperplanes cut the face out.
struct FacePrime {
  std::vector<unsigned> variables;

  /// The m-th power of the face prime: all degree-m monomials in its variables.
  MonomialIdeal power(std::size_t ambient_n, unsigned m) const;

  friend bool operator==(const FacePrime&, const FacePrime&) = default;
};

namespace detail {

/// Calls f with each k-subset of {0, ..., n_items - 1} in lexicographic order.
inline void for_each_combination(unsigned n_items, unsigned k,
                                 const std::function<void(std::span<const unsigned>)>& f) {
  if (k > n_items) return;
  std::vector<unsigned> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    f(idx);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n_items - k + static_cast<unsigned>(i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Sum of the `count` smallest entries.
inline std::uint64_t smallest_sum(std::span<const Exponent> exps, unsigned count) {
  std::vector<Exponent> sorted(exps.begin(), exps.end());
  std::partial_sort(sorted.begin(), sorted.begin() + count, sorted.end());
  return std::accumulate(sorted.begin(), sorted.begin() + count, std::uint64_t{0});
}

inline void require_vars(const SimplicialSpec& spec, const Monomial& a) {
  if (a.num_vars() != spec.num_vars()) {
    throw DimensionError("monomial " + to_string(a) + " has " + std::to_string(a.num_vars()) +
                         " variables, I(n,c) with n=" + std::to_string(spec.n()) + " needs " +
                         std::to_string(spec.num_vars()));
  }
}

}  // namespace detail

inline MonomialIdeal FacePrime::power(std::size_t ambient_n, unsigned m) const {
  if (m == 0) throw ParameterError("face prime power must be >= 1");
  // Compositions of m into |variables| parts.
  std::vector<Monomial> gens;
  std::vector<Exponent> exps(ambient_n + 1, 0);
  const std::function<void(std::size_t, unsigned)> place = [&](std::size_t pos, unsigned left) {
    const unsigned var = variables[pos];
    if (pos + 1 == variables.size()) {
      exps[var] = left;
      gens.emplace_back(exps);
      exps[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[var] = e;
      place(pos + 1, left - e);
    }
    exps[var] = 0;
  };
  place(0, m);
  return MonomialIdeal::from_generators(ambient_n, std::move(gens));
}

/// I(n, c): all squarefree monomials of degree n + 2 - c.
inline MonomialIdeal simplicial_ideal(const SimplicialSpec& spec) {
  std::vector<Monomial> gens;
  detail::for_each_combination(spec.n() + 1, spec.generator_degree(),
                               [&](std::span<const unsigned> idx) {
                                 std::vector<Exponent> e(spec.num_vars(), 0);
                                 for (auto i : idx) e[i] = 1;
                                 gens.emplace_back(std::move(e));
                               });
  return MonomialIdeal::from_generators(spec.n(), std::move(gens));
}

/// The binomial(n+1, c) face primes, in lexicographic order of their index sets.
inline std::vector<FacePrime> face_primes(const SimplicialSpec& spec) {
  std::vector<FacePrime> out;
  detail::for_each_combination(spec.n() + 1, spec.c(), [&](std::span<const unsigned> idx) {
    out.push_back(FacePrime{{idx.begin(), idx.end()}});
  });
  return out;
}

/// How symbolic_member evaluates the c-subset condition.
enum class SubsetCheck {
  sorted_prefix,  ///< sum of the c smallest exponents
  exhaustive,     ///< every c-subset; debug oracle
};

/// x^a ∈ I^(m)(n,c) iff every c-subset of exponents sums to at least m.
/// The minimum c-subset sum is the sum of the c smallest exponents.
inline bool symbolic_member(const SimplicialSpec& spec, unsigned m, const Monomial& a,
                            SubsetCheck mode = SubsetCheck::sorted_prefix) {
  if (m == 0) throw ParameterError("symbolic power order m must be >= 1");
  detail::require_vars(spec, a);
  if (mode == SubsetCheck::sorted_prefix) return detail::smallest_sum(a.exponents(), spec.c()) >= m;

  bool ok = true;
  detail::for_each_combination(spec.n() + 1, spec.c(), [&](std::span<const unsigned> idx) {
    std::uint64_t s = 0;
    for (auto i : idx) s += a[i];
    if (s < m) ok = false;
  });
  return ok;
}

/// The c-subset with the smallest exponent sum (ties broken toward lower
/// indices), together with that sum.
struct WeakestFace {
  std::vector<unsigned> variables;
  std::uint64_t sum = 0;
};

inline WeakestFace weakest_face(const SimplicialSpec& spec, const Monomial& a) {
  detail::require_vars(spec, a);
  std::vector<unsigned> order(spec.num_vars());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](unsigned i, unsigned j) { return a[i] < a[j]; });
  WeakestFace out;
  out.variables.assign(order.begin(), order.begin() + spec.c());
  std::sort(out.variables.begin(), out.variables.end());
  for (auto i : out.variables) out.sum += a[i];
  return out;
}

namespace detail {

/// Visits every nondecreasing vector in [0, cap]^len.
inline void for_each_sorted_vector(std::size_t len, Exponent cap,
                                   const std::function<void(std::span<const Exponent>)>& f) {
  std::vector<Exponent> v(len, 0);
  const std::function<void(std::size_t, Exponent)> rec = [&](std::size_t pos, Exponent lo) {
    if (pos == len) {
      f(v);
      return;
    }
    for (Exponent e = lo; e <= cap; ++e) {
      v[pos] = e;
      rec(pos + 1, e);
    }
  };
  rec(0, 0);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (out > UINT64_MAX / num) return UINT64_MAX;
    out = out * num / i;
  }
  return out;
}

}  // namespace detail

/// Minimal generators of I^(m)(n, c) from the c-subset criterion.
///
/// A minimal generator has every exponent <= m: lowering an exponent above m
/// to m keeps every c-subset sum >= m. The membership condition is symmetric
/// in the variables, so the search runs over sorted exponent vectors in
/// [0, m]^{n+1}; a sorted vector is kept iff it is a member and removing one
/// from any positive exponent leaves the ideal. Each kept vector contributes
/// its distinct permutations.
inline MonomialIdeal symbolic_power(const SimplicialSpec& spec, unsigned m, const Limits& limits = {}) {
  if (m == 0) throw ParameterError("symbolic power order m must be >= 1");
  const std::size_t len = spec.num_vars();
  detail::charge(detail::binomial(m + len, len), limits.max_candidates,
                 "symbolic power candidate enumeration");

  const unsigned c = spec.c();
  std::vector<Monomial> gens;
  std::vector<Exponent> scratch(len);
  detail::for_each_sorted_vector(len, m, [&](std::span<const Exponent> v) {
    // v is sorted, so the c smallest are its prefix.
    const auto prefix = std::accumulate(v.begin(), v.begin() + c, std::uint64_t{0});
    // Minimal generators hit the bound exactly: one unit off any exponent
    // lowers each subset sum by at most one.
    if (prefix != m) return;
    for (std::size_t i = 0; i < len; ++i) {
      if (v[i] == 0 || (i > 0 && v[i] == v[i - 1])) continue;
      std::copy(v.begin(), v.end(), scratch.begin());
      --scratch[i];
      if (detail::smallest_sum(scratch, c) >= m) return;
    }
    std::copy(v.begin(), v.end(), scratch.begin());
    do {
      gens.emplace_back(scratch);
      detail::charge(gens.size(), limits.max_generators, "symbolic power generators");
    } while (std::next_permutation(scratch.begin(), scratch.end()));
  });
  return MonomialIdeal::from_generators(spec.n(), std::move(gens));
}

/// I^(m)(n, c) as the intersection of the m-th powers of all face primes.
/// Independent of symbolic_member; used to cross-check symbolic_power.
inline MonomialIdeal symbolic_power_oracle(const SimplicialSpec& spec, unsigned m,
                                           const Limits& limits = {}) {
  if (m == 0) throw ParameterError("symbolic power order m must be >= 1");
  std::vector<MonomialIdeal> powers;
  for (const auto& face : face_primes(spec)) powers.push_back(face.power(spec.n(), m));
  return intersect_all(powers, limits);
}

/// Minimal generators of I^r(n, c): exponent vectors of total degree
/// (n - c + 2) r with every entry at most r.
inline MonomialIdeal ordinary_power_min_gens(const SimplicialSpec& spec, unsigned r,
                                             const Limits& limits = {}) {
  if (r == 0) throw ParameterError("ordinary power r must be >= 1");
  const std::size_t len = spec.num_vars();
  const std::uint64_t degree = std::uint64_t{spec.generator_degree()} * r;

  std::vector<Monomial> gens;
  std::vector<Exponent> v(len, 0);
  const std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos,
                                                                  std::uint64_t left) {
    if (pos + 1 == len) {
      if (left > r) return;
      v[pos] = static_cast<Exponent>(left);
      gens.emplace_back(v);
      detail::charge(gens.size(), limits.max_generators, "ordinary power generators");
      return;
    }
    // The remaining positions can absorb at most r each.
    const std::uint64_t rest_cap = std::uint64_t{r} * (len - pos - 1);
    const std::uint64_t lo = left > rest_cap ? left - rest_cap : 0;
    const std::uint64_t hi = std::min<std::uint64_t>(r, left);
    for (std::uint64_t e = lo; e <= hi; ++e) {
      v[pos] = static_cast<Exponent>(e);
      rec(pos + 1, left - e);
    }
  };
  rec(0, degree);
  // Equal degree makes the list an antichain already; sorting is all that remains.
  std::sort(gens.begin(), gens.end(), GradedLexLess{});
  return MonomialIdeal::from_minimal_sorted(spec.n(), std::move(gens));
}

/// x^a ∈ I^r(n, c) iff sum_i min(a_i, r) >= (n - c + 2) r.
inline bool ordinary_member(const SimplicialSpec& spec, unsigned r, const Monomial& a) {
  if (r == 0) throw ParameterError("ordinary power r must be >= 1");
  detail::require_vars(spec, a);
  std::uint64_t capped = 0;
  for (auto e : a.exponents()) capped += std::min<std::uint64_t>(e, r);
  return capped >= std::uint64_t{spec.generator_degree()} * r;
}

/// How far a monomial falls short of the ordinary-power degree bound; 0 for members.
inline std::uint64_t ordinary_degree_deficit(const SimplicialSpec& spec, unsigned r,
                                             const Monomial& a) {
  if (r == 0) throw ParameterError("ordinary power r must be >= 1");
  detail::require_vars(spec, a);
  std::uint64_t capped = 0;
  for (auto e : a.exponents()) capped += std::min<std::uint64_t>(e, r);
  const std::uint64_t need = std::uint64_t{spec.generator_degree()} * r;
  return capped >= need ? 0 : need - capped;
}

}  // namespace skelideal
