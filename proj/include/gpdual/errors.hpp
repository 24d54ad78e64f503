#pragma once

#include <stdexcept>
#include <string>

namespace gpdual {

/* Raised when a retry or time budget runs out. Carries enough context in the
 * message (seed, attempt counts) to reproduce the exhaustion. */
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/* Contract violations: bad dimensions, non-skew input, ring mismatch, ... */
class InvariantError : public std::invalid_argument {
public:
  explicit InvariantError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gpdual
