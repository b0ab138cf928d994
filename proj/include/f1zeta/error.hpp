#pragma once

#include <stdexcept>
#include <string>

namespace f1zeta {

// Bad arguments or a configuration that violates a precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A size cap (vertex count, enumeration box) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// A geometric series with a zero exponent vector.
class Divergence : public std::domain_error {
 public:
  explicit Divergence(const std::string& what) : std::domain_error(what) {}
};

// Floating-point rounding or an internal consistency check did not hold.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace f1zeta
