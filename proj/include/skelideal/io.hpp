#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

namespace skelideal {

/// One generator per line in canonical text form, each line newline-terminated.
/// The zero ideal serializes to the empty string.
inline std::string to_text(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

/// Inverse of to_text; blank lines are skipped.
inline MonomialIdeal ideal_from_text(std::string_view text, std::size_t ambient_n) {
  std::vector<Monomial> gens;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (detail::trim(line).empty()) continue;
    gens.push_back(parse_monomial(line, ambient_n));
  }
  return MonomialIdeal::from_generators(ambient_n, std::move(gens));
}

inline nlohmann::json to_json(const Monomial& m) {
  return nlohmann::json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
}

/// JSON array of exponent arrays, in canonical generator order.
inline nlohmann::json to_json(const MonomialIdeal& ideal) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : ideal.generators()) arr.push_back(to_json(g));
  return arr;
}

/// Reads an array of exponent arrays; every row must have ambient_n + 1 entries.
inline MonomialIdeal ideal_from_json(const nlohmann::json& arr, std::size_t ambient_n) {
  if (!arr.is_array()) throw ParseError("ideal JSON must be an array of exponent arrays");
  std::vector<Monomial> gens;
  for (const auto& row : arr) {
    if (!row.is_array()) throw ParseError("generator must be an array of exponents");
    std::vector<Exponent> exps;
    for (const auto& e : row) {
      if (!e.is_number_unsigned() ||
          e.get<std::uint64_t>() > std::numeric_limits<Exponent>::max()) {
        throw ParseError("exponents must be non-negative integers within range");
      }
      exps.push_back(static_cast<Exponent>(e.get<std::uint64_t>()));
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::from_generators(ambient_n, std::move(gens));
}

}  // namespace skelideal
