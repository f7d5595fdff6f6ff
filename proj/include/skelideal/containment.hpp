#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"
#include "ideal.hpp"
#include "limits.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"

namespace skelideal {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// The decomposition m = k c - p with 0 <= p < c.
struct ThmAParams {
  std::int64_t k = 0;
  std::int64_t p = 0;

  friend bool operator==(const ThmAParams&, const ThmAParams&) = default;
};

inline ThmAParams thm_a_params(std::int64_t c, std::int64_t m) {
  if (c < 1) throw ParameterError("c must be >= 1");
  if (m < 1) throw ParameterError("m must be >= 1");
  const std::int64_t k = (m + c - 1) / c;
  return {k, k * c - m};
}

/// I^(m)(n,c) ⊆ I^r(n,c) iff r (n - c + 2) <= (n + 1) k - p, where m = k c - p.
/// Exact integer arithmetic; the bound is attained at equality.
inline bool thm_a_predicate(const SimplicialSpec& spec, std::int64_t m, std::int64_t r) {
  if (r < 1) throw ParameterError("r must be >= 1");
  const auto [k, p] = thm_a_params(spec.c(), m);
  const std::int64_t n = spec.n();
  const std::int64_t c = spec.c();
  return r * (n - c + 2) <= (n + 1) * k - p;
}

/// Sufficient condition for I^(m)(n,c) ⊆ I^(s)(n,d): c <= d and s c <= m d.
inline bool thm_b_predicate(std::int64_t c, std::int64_t d, std::int64_t m, std::int64_t s) {
  if (c < 1 || d < 1) throw ParameterError("c and d must be >= 1");
  if (m < 1 || s < 1) throw ParameterError("m and s must be >= 1");
  return c <= d && s * c <= m * d;
}

/// A minimal generator of I^(m)(n,c) outside I^r(n,c), if one exists.
inline std::optional<Monomial> containment_counterexample(const SimplicialSpec& spec, unsigned m,
                                                          unsigned r, const Limits& limits = {}) {
  if (r == 0) throw ParameterError("r must be >= 1");
  const auto sym = symbolic_power(spec, m, limits);
  for (const auto& g : sym.generators()) {
    if (!ordinary_member(spec, r, g)) return g;
  }
  return std::nullopt;
}

/// Decides I^(m)(n,c) ⊆ I^r(n,c) by checking every minimal generator.
inline bool containment_oracle(const SimplicialSpec& spec, unsigned m, unsigned r,
                               const Limits& limits = {}) {
  return !containment_counterexample(spec, m, r, limits).has_value();
}

/// A minimal generator of I^(m)(n,c) outside I^(s)(n,d), if one exists.
inline std::optional<Monomial> symbolic_containment_counterexample(unsigned n, unsigned c, unsigned d,
                                                                   unsigned m, unsigned s,
                                                                   const Limits& limits = {}) {
  const SimplicialSpec source(n, c);
  const SimplicialSpec target(n, d);
  if (s == 0) throw ParameterError("s must be >= 1");
  const auto sym = symbolic_power(source, m, limits);
  for (const auto& g : sym.generators()) {
    if (!symbolic_member(target, s, g)) return g;
  }
  return std::nullopt;
}

/// Decides I^(m)(n,c) ⊆ I^(s)(n,d) directly.
inline bool symbolic_containment_oracle(unsigned n, unsigned c, unsigned d, unsigned m, unsigned s,
                                        const Limits& limits = {}) {
  return !symbolic_containment_counterexample(n, c, d, m, s, limits).has_value();
}

/// rho(I(n,c)) = c (n - c + 2) / (n + 1), reduced.
inline Rational resurgence(const SimplicialSpec& spec) {
  const std::int64_t n = spec.n();
  const std::int64_t c = spec.c();
  return Rational(c * (n - c + 2), n + 1);
}

struct ResurgenceWitness {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t r = 0;
  Rational ratio;

  friend bool operator==(const ResurgenceWitness&, const ResurgenceWitness&) = default;
};

/// m_k = k c and r_k the least integer strictly above (n + 1) k / (n - c + 2).
/// I^(m_k) is never contained in I^(r_k), and m_k / r_k tends to rho.
inline ResurgenceWitness resurgence_witness(const SimplicialSpec& spec, std::int64_t k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  const std::int64_t n = spec.n();
  const std::int64_t c = spec.c();
  // floor(q) + 1 is the least integer strictly greater than q, integer q included.
  const std::int64_t r = (n + 1) * k / (n - c + 2) + 1;
  const std::int64_t m = k * c;
  return {k, m, r, Rational(m, r)};
}

/// Largest m/r over noncontainment pairs in the box [1, max_m] x [1, max_r].
struct EmpiricalSup {
  std::int64_t max_m = 0;
  std::int64_t max_r = 0;
  /// Empty when every pair in the box is a containment.
  std::optional<Rational> ratio;
  std::int64_t argmax_m = 0;
  std::int64_t argmax_r = 0;
  std::int64_t noncontainment_pairs = 0;
};

/// Sweeps the box with the closed-form criterion, or with the brute-force
/// oracle when `use_oracle` is set. Ties keep the pair found first (m, then r,
/// ascending).
inline EmpiricalSup empirical_resurgence_sup(const SimplicialSpec& spec, std::int64_t max_m,
                                             std::int64_t max_r, bool use_oracle = false,
                                             const Limits& limits = {}) {
  if (max_m < 1 || max_r < 1) throw ParameterError("box bounds must be >= 1");
  detail::charge(detail::sat_mul(max_m, max_r), limits.max_candidates, "resurgence box");
  EmpiricalSup out{max_m, max_r, std::nullopt, 0, 0, 0};
  for (std::int64_t m = 1; m <= max_m; ++m) {
    for (std::int64_t r = 1; r <= max_r; ++r) {
      const bool contained =
          use_oracle ? containment_oracle(spec, static_cast<unsigned>(m), static_cast<unsigned>(r), limits)
                     : thm_a_predicate(spec, m, r);
      if (contained) continue;
      ++out.noncontainment_pairs;
      const Rational q(m, r);
      if (!out.ratio || q > *out.ratio) {
        out.ratio = q;
        out.argmax_m = m;
        out.argmax_r = r;
      }
    }
  }
  return out;
}

/// Least m with I^(m)(n,c) ⊆ I^r(n,c). Always at most c r.
inline std::int64_t min_containing_m(const SimplicialSpec& spec, std::int64_t r) {
  if (r < 1) throw ParameterError("r must be >= 1");
  std::int64_t m = 1;
  while (!thm_a_predicate(spec, m, r)) ++m;
  return m;
}

enum class QueryKind { ordinary, symbolic };

/// One containment query with its closed-form answer and, optionally, the
/// brute-force answer.
///
/// Ordinary queries ask I^(m)(n,c) ⊆ I^r(n,c) and the closed form is exact.
/// Symbolic queries ask I^(m)(n,c) ⊆ I^(s)(n,d) and the closed form is only
/// sufficient, so fast_path = false with oracle = true is legitimate there.
struct ContainmentVerdict {
  QueryKind kind = QueryKind::ordinary;
  unsigned n = 0;
  unsigned c = 0;
  unsigned d = 0;  // symbolic queries only
  unsigned m = 0;
  unsigned r_or_s = 0;
  bool fast_path = false;
  std::optional<bool> oracle;
  std::optional<bool> agree;
  std::optional<Monomial> counterexample;
};

inline ContainmentVerdict query_containment(unsigned n, unsigned c, unsigned m, unsigned r,
                                            bool run_oracle, const Limits& limits = {}) {
  const SimplicialSpec spec(n, c);
  if (m == 0) throw ParameterError("m must be >= 1");
  ContainmentVerdict v;
  v.kind = QueryKind::ordinary;
  v.n = n;
  v.c = c;
  v.m = m;
  v.r_or_s = r;
  v.fast_path = thm_a_predicate(spec, m, r);
  if (run_oracle) {
    v.counterexample = containment_counterexample(spec, m, r, limits);
    v.oracle = !v.counterexample.has_value();
    v.agree = *v.oracle == v.fast_path;
  }
  return v;
}

inline ContainmentVerdict query_symbolic_containment(unsigned n, unsigned c, unsigned d, unsigned m,
                                                     unsigned s, bool run_oracle,
                                                     const Limits& limits = {}) {
  const SimplicialSpec source(n, c);
  const SimplicialSpec target(n, d);
  if (m == 0) throw ParameterError("m must be >= 1");
  ContainmentVerdict v;
  v.kind = QueryKind::symbolic;
  v.n = n;
  v.c = c;
  v.d = d;
  v.m = m;
  v.r_or_s = s;
  v.fast_path = thm_b_predicate(c, d, m, s);
  if (run_oracle) {
    v.counterexample = symbolic_containment_counterexample(n, c, d, m, s, limits);
    v.oracle = !v.counterexample.has_value();
    v.agree = *v.oracle == v.fast_path;
  }
  return v;
}

struct ResurgenceReport {
  unsigned n = 0;
  unsigned c = 0;
  Rational rho;
  std::vector<ResurgenceWitness> witnesses;
  EmpiricalSup empirical;
  /// (r, least m with containment) for r = 1..boundary_r.
  std::vector<std::pair<std::int64_t, std::int64_t>> boundary;
};

inline ResurgenceReport resurgence_report(const SimplicialSpec& spec, std::int64_t num_witnesses,
                                          std::int64_t max_m, std::int64_t max_r,
                                          bool use_oracle = false, const Limits& limits = {}) {
  ResurgenceReport rep;
  rep.n = spec.n();
  rep.c = spec.c();
  rep.rho = resurgence(spec);
  for (std::int64_t k = 1; k <= num_witnesses; ++k) rep.witnesses.push_back(resurgence_witness(spec, k));
  rep.empirical = empirical_resurgence_sup(spec, max_m, max_r, use_oracle, limits);
  for (std::int64_t r = 1; r <= max_r; ++r) rep.boundary.emplace_back(r, min_containing_m(spec, r));
  return rep;
}

}  // namespace skelideal
