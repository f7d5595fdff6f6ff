#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "error.hpp"
#include "limits.hpp"
#include "monomial.hpp"

namespace skelideal {

enum class OutputFormat { text, json };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  throw ParameterError("format must be 'text' or 'json', got '" + std::string(s) + "'");
}

/// Front-end settings. Resolved from, in increasing priority: defaults, a
/// key = value config file, SKELIDEAL_* environment variables, flags.
struct CliConfig {
  Limits limits;
  /// Brute-force oracles refuse queries beyond these.
  unsigned oracle_max_n = 6;
  unsigned oracle_max_m = 12;
  unsigned oracle_max_r = 12;
  OutputFormat format = OutputFormat::text;
  bool deep = false;

  void validate() const {
    if (limits.max_candidates == 0 || limits.max_generators == 0)
      throw ParameterError("budgets must be positive");
    if (oracle_max_n == 0 || oracle_max_m == 0 || oracle_max_r == 0)
      throw ParameterError("oracle bounds must be positive");
  }

  /// Applies one setting; `source` names where it came from, for error text.
  void set(std::string_view key, std::string_view value, std::string_view source) {
    const auto number = [&]() -> std::uint64_t {
      try {
        return detail::parse_uint(value, value);
      } catch (const ParseError&) {
        throw ParameterError(std::string(source) + ": '" + std::string(key) +
                             "' needs a non-negative integer, got '" + std::string(value) + "'");
      }
    };
    const auto small = [&]() {
      const auto v = number();
      if (v > 1'000'000) throw ParameterError(std::string(source) + ": '" + std::string(key) + "' too large");
      return static_cast<unsigned>(v);
    };
    if (key == "max_candidates") {
      limits.max_candidates = number();
    } else if (key == "max_generators") {
      limits.max_generators = number();
    } else if (key == "oracle_max_n") {
      oracle_max_n = small();
    } else if (key == "oracle_max_m") {
      oracle_max_m = small();
    } else if (key == "oracle_max_r") {
      oracle_max_r = small();
    } else if (key == "format") {
      format = parse_format(detail::trim(value));
    } else if (key == "deep") {
      const auto v = detail::trim(value);
      if (v == "true" || v == "1") {
        deep = true;
      } else if (v == "false" || v == "0") {
        deep = false;
      } else {
        throw ParameterError(std::string(source) + ": 'deep' must be true or false");
      }
    } else {
      throw ParameterError(std::string(source) + ": unknown setting '" + std::string(key) + "'");
    }
  }

  /// Reads `key = value` lines; `#` starts a comment, blank lines are ignored.
  void apply_file_text(std::string_view text, std::string_view source) {
    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto body = detail::trim(line);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      const std::string where = std::string(source) + ":" + std::to_string(lineno);
      if (eq == std::string_view::npos) throw ParameterError(where + ": expected key = value");
      set(detail::trim(body.substr(0, eq)), detail::trim(body.substr(eq + 1)), where);
    }
  }

  void apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_file_text(buf.str(), path);
  }

  using EnvLookup = std::function<std::optional<std::string>(const char*)>;

  static std::optional<std::string> process_env(const char* name) {
    if (const char* v = std::getenv(name)) return std::string(v);
    return std::nullopt;
  }

  /// SKELIDEAL_MAX_CANDIDATES, SKELIDEAL_MAX_GENERATORS, SKELIDEAL_ORACLE_MAX_{N,M,R},
  /// SKELIDEAL_FORMAT, SKELIDEAL_DEEP.
  void apply_env(const EnvLookup& env) {
    static constexpr std::pair<const char*, const char*> kVars[] = {
        {"SKELIDEAL_MAX_CANDIDATES", "max_candidates"}, {"SKELIDEAL_MAX_GENERATORS", "max_generators"},
        {"SKELIDEAL_ORACLE_MAX_N", "oracle_max_n"},     {"SKELIDEAL_ORACLE_MAX_M", "oracle_max_m"},
        {"SKELIDEAL_ORACLE_MAX_R", "oracle_max_r"},     {"SKELIDEAL_FORMAT", "format"},
        {"SKELIDEAL_DEEP", "deep"},
    };
    for (const auto& [var, key] : kVars) {
      if (auto v = env(var)) set(key, *v, var);
    }
  }
};

}  // namespace skelideal
