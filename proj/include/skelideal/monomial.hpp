#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace skelideal {

using Exponent = std::uint32_t;

/// A monomial x_0^{a_0} * ... * x_n^{a_n}, stored as its exponent vector.
///
/// The ambient projective dimension n is implied by the length (n + 1) and is
/// at least 1. Values are immutable once constructed.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    if (exps_.size() < 2) {
      throw DimensionError("monomial needs at least 2 variables, got " +
                           std::to_string(exps_.size()));
    }
  }

  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  /// The unit monomial 1 in n + 1 variables.
  static Monomial one(std::size_t num_vars) {
    return Monomial(std::vector<Exponent>(num_vars, 0));
  }

  /// x_var in n + 1 variables.
  static Monomial variable(std::size_t num_vars, std::size_t var) {
    std::vector<Exponent> e(num_vars, 0);
    if (var >= num_vars) {
      throw DimensionError("variable x" + std::to_string(var) + " out of range for " +
                           std::to_string(num_vars) + " variables");
    }
    e[var] = 1;
    return Monomial(std::move(e));
  }

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::size_t ambient_n() const noexcept { return exps_.size() - 1; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

namespace detail {

inline void require_same_length(const Monomial& a, const Monomial& b, const char* op) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionError(std::string(op) + ": length mismatch (" +
                         std::to_string(a.num_vars()) + " vs " +
                         std::to_string(b.num_vars()) + ")");
  }
}

template <class Combine>
Monomial zip_with(const Monomial& a, const Monomial& b, const char* op, Combine f) {
  require_same_length(a, b, op);
  std::vector<Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(a[i], b[i]);
  return Monomial(std::move(out));
}

}  // namespace detail

/// True iff a divides b, i.e. a_i <= b_i for every i.
inline bool divides(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b, "divides");
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  return detail::zip_with(a, b, "lcm", [](Exponent x, Exponent y) { return std::max(x, y); });
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  return detail::zip_with(a, b, "gcd", [](Exponent x, Exponent y) { return std::min(x, y); });
}

/// Product of monomials. Throws std::overflow_error if an exponent would wrap.
inline Monomial mul(const Monomial& a, const Monomial& b) {
  return detail::zip_with(a, b, "mul", [](Exponent x, Exponent y) {
    if (x > std::numeric_limits<Exponent>::max() - y) {
      throw std::overflow_error("monomial exponent overflow");
    }
    return static_cast<Exponent>(x + y);
  });
}

inline Monomial operator*(const Monomial& a, const Monomial& b) { return mul(a, b); }

inline std::uint64_t total_degree(const Monomial& a) { return a.total_degree(); }

/// Graded lexicographic order: lower total degree first; within a degree,
/// the vector with the larger exponent at the first differing variable
/// comes first (x0 > x1 > ... > xn).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da < db;
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                        std::greater<>{});
  }
};

/// Canonical text: `x<i>^<e>` factors joined by `*`, `^1` omitted, zero
/// exponents skipped, and `1` for the unit monomial.
inline std::string to_string(const Monomial& a) {
  std::string out;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (a[i] != 1) {
      out += '^';
      out += std::to_string(a[i]);
    }
  }
  return out.empty() ? std::string("1") : out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& a) { return os << to_string(a); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view digits, std::string_view context) {
  digits = trim(digits);
  std::uint64_t v = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (digits.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("expected a non-negative integer in '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses the canonical text form (whitespace tolerated) into a monomial in
/// n + 1 variables. Repeated variables multiply; unused variables get 0.
inline Monomial parse_monomial(std::string_view text, std::size_t ambient_n) {
  std::vector<Exponent> exps(ambient_n + 1, 0);
  const std::string_view whole = detail::trim(text);
  if (whole.empty()) throw ParseError("empty monomial");

  std::size_t start = 0;
  while (start <= whole.size()) {
    std::size_t stop = whole.find('*', start);
    if (stop == std::string_view::npos) stop = whole.size();
    const std::string_view factor = detail::trim(whole.substr(start, stop - start));
    start = stop + 1;

    if (factor.empty()) throw ParseError("empty factor in '" + std::string(whole) + "'");
    if (factor == "1") continue;
    if (factor.front() != 'x') {
      throw ParseError("factor '" + std::string(factor) + "' must start with 'x'");
    }
    const std::size_t caret = factor.find('^');
    const std::uint64_t var = detail::parse_uint(factor.substr(1, caret == std::string_view::npos
                                                                      ? std::string_view::npos
                                                                      : caret - 1),
                                                 factor);
    std::uint64_t e = 1;
    if (caret != std::string_view::npos) e = detail::parse_uint(factor.substr(caret + 1), factor);

    if (var > ambient_n) {
      throw DimensionError("variable x" + std::to_string(var) + " out of range for n=" +
                           std::to_string(ambient_n));
    }
    if (e > std::numeric_limits<Exponent>::max() - exps[var]) {
      throw ParseError("exponent too large in '" + std::string(factor) + "'");
    }
    exps[var] += static_cast<Exponent>(e);
    if (stop == whole.size()) break;
  }
  return Monomial(std::move(exps));
}

}  // namespace skelideal

template <>
struct std::hash<skelideal::Monomial> {
  std::size_t operator()(const skelideal::Monomial& m) const noexcept {
    std::size_t h = m.num_vars();
    for (auto e : m.exponents()) h = h * 1000003u ^ std::hash<skelideal::Exponent>{}(e);
    return h;
  }
};
