#pragma once

#include <stdexcept>
#include <string>

namespace frdr {

/// Bad input: parameter outside its documented domain, malformed spec, …
/// CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric routine could not reach its accuracy contract.
/// CLI maps this to exit code 3.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frdr
