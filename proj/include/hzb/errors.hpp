#pragma once

#include <stdexcept>

namespace hzb {

// Germ fails gcd(m,k,l) = 1.
struct IrreducibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Germ has m < 2, so the surface is smooth.
struct NotSingularError : std::domain_error {
  using std::domain_error::domain_error;
};

// Germ has k > l and the caller did not opt in to unordered exponents.
struct OrderingError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operation only defined on a narrower input class (e.g. pairwise coprime
// exponents) and the input is outside it.
struct UnsupportedCaseError : std::domain_error {
  using std::domain_error::domain_error;
};

// Graph is not one of the bamboo / star shapes this library produces.
struct UnsupportedShapeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hzb
