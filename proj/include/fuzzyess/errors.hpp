#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyess {

// Malformed game document. `location` is "line L, column C" for syntax
// errors and a field path such as "payoffs[1][2].b" for structural ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string location)
      : std::runtime_error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// Well-formed document whose contents violate a game invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric routine failed to meet its contract (bracketing, convergence).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fuzzyess
