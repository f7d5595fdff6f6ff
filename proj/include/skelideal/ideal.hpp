#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "limits.hpp"
#include "monomial.hpp"

namespace skelideal {

/// A monomial ideal in K[x_0, ..., x_n], held as its minimal generating set.
///
/// Generators form a divisibility antichain sorted by GradedLexLess, so two
/// equal ideals always have identical generator lists. No generators means
/// the zero ideal; the single generator 1 means the unit ideal.
class MonomialIdeal {
 public:
  /// Canonical ideal generated by `gens`: duplicates and generators divisible
  /// by another generator are dropped.
  static MonomialIdeal from_generators(std::size_t ambient_n, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
      if (g.num_vars() != ambient_n + 1) {
        throw DimensionError("generator " + to_string(g) + " has " +
                             std::to_string(g.num_vars()) + " variables, expected " +
                             std::to_string(ambient_n + 1));
      }
    }
    return MonomialIdeal(ambient_n, minimalize(std::move(gens)));
  }

  static MonomialIdeal zero(std::size_t ambient_n) { return MonomialIdeal(ambient_n, {}); }

  static MonomialIdeal unit(std::size_t ambient_n) {
    return MonomialIdeal(ambient_n, {Monomial::one(ambient_n + 1)});
  }

  /// Wraps a list already known to be a sorted antichain. Only checked in
  /// debug builds; callers own the invariant.
  static MonomialIdeal from_minimal_sorted(std::size_t ambient_n, std::vector<Monomial> gens) {
    assert(minimalize(gens) == gens);
    return MonomialIdeal(ambient_n, std::move(gens));
  }

  std::size_t ambient_n() const noexcept { return n_; }
  std::size_t num_vars() const noexcept { return n_ + 1; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    if (m.num_vars() != num_vars()) {
      throw DimensionError("monomial " + to_string(m) + " does not live in n=" +
                           std::to_string(n_));
    }
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return divides(g, m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Sorts by graded lex, removes duplicates, then keeps a monomial iff no
  /// previously kept one divides it. A divisor never has larger degree, so
  /// one sweep in degree order is enough.
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), GradedLexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
      const bool redundant = std::any_of(kept.begin(), kept.end(),
                                         [&](const Monomial& k) { return divides(k, g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
  }

 private:
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  std::size_t n_;
  std::vector<Monomial> gens_;
};

namespace detail {

inline void require_same_ambient(const MonomialIdeal& i, const MonomialIdeal& j, const char* op) {
  if (i.ambient_n() != j.ambient_n()) {
    throw DimensionError(std::string(op) + ": ambient mismatch (n=" +
                         std::to_string(i.ambient_n()) + " vs n=" +
                         std::to_string(j.ambient_n()) + ")");
  }
}

template <class Combine>
MonomialIdeal pairwise(const MonomialIdeal& i, const MonomialIdeal& j, const char* op,
                       const Limits& limits, Combine f) {
  require_same_ambient(i, j, op);
  charge(sat_mul(i.size(), j.size()), limits.max_candidates, std::string(op) + " pairwise products");
  std::vector<Monomial> out;
  out.reserve(i.size() * j.size());
  for (const auto& g : i.generators()) {
    for (const auto& h : j.generators()) out.push_back(f(g, h));
  }
  auto gens = MonomialIdeal::minimalize(std::move(out));
  charge(gens.size(), limits.max_generators, std::string(op) + " result generators");
  return MonomialIdeal::from_minimal_sorted(i.ambient_n(), std::move(gens));
}

}  // namespace detail

inline bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal.contains(m);
}

/// I + J.
inline MonomialIdeal add(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j, "add");
  std::vector<Monomial> gens(i.generators().begin(), i.generators().end());
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal::from_minimal_sorted(i.ambient_n(),
                                            MonomialIdeal::minimalize(std::move(gens)));
}

/// I * J.
inline MonomialIdeal mul(const MonomialIdeal& i, const MonomialIdeal& j, const Limits& limits = {}) {
  return detail::pairwise(i, j, "mul", limits,
                          [](const Monomial& g, const Monomial& h) { return g * h; });
}

/// I ∩ J, generated by the pairwise lcms of the generators.
inline MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j,
                               const Limits& limits = {}) {
  return detail::pairwise(i, j, "intersect", limits,
                          [](const Monomial& g, const Monomial& h) { return lcm(g, h); });
}

/// Folds intersect left to right, canonicalizing after every step.
inline MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals, const Limits& limits = {}) {
  if (ideals.empty()) throw ParameterError("intersect_all: empty family");
  MonomialIdeal acc = ideals.front();
  for (const auto& next : ideals.subspan(1)) acc = intersect(acc, next, limits);
  return acc;
}

/// I^r for r >= 1 by square-and-multiply.
inline MonomialIdeal pow(const MonomialIdeal& ideal, unsigned r, const Limits& limits = {}) {
  if (r == 0) throw ParameterError("pow: exponent must be >= 1");
  MonomialIdeal result = ideal;
  MonomialIdeal base = ideal;
  bool have_result = false;
  while (r > 0) {
    if (r & 1u) {
      result = have_result ? mul(result, base, limits) : base;
      have_result = true;
    }
    r >>= 1u;
    if (r > 0) base = mul(base, base, limits);
  }
  return result;
}

/// I ⊆ J: every generator of I lies in J.
inline bool is_subideal(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j, "is_subideal");
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [&](const Monomial& g) { return j.contains(g); });
}

inline bool equals(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j, "equals");
  return i == j;
}

inline MonomialIdeal operator+(const MonomialIdeal& i, const MonomialIdeal& j) { return add(i, j); }
inline MonomialIdeal operator*(const MonomialIdeal& i, const MonomialIdeal& j) { return mul(i, j); }

}  // namespace skelideal
