#pragma once

#include <stdexcept>
#include <string>

namespace skelideal {

/// Operands live in different ambient spaces (exponent vectors of unequal length).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameters outside their documented domain, e.g. c > n or r = 0.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed monomial text.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured enumeration or intersection budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skelideal
