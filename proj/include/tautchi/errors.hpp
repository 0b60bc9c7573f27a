#pragma once

#include <stdexcept>

namespace tautchi {

// Inverting a series whose constant term is not an invertible constant.
struct NotUnitError : std::domain_error {
  using std::domain_error::domain_error;
};

// log of a series with constant term != 1, or exp with constant term != 0.
struct NonzeroConstantError : std::domain_error {
  using std::domain_error::domain_error;
};

// A rational function in z that was required to reduce to a Laurent
// polynomial (or to a constant) but does not.  In the localization
// pipeline this signals a bookkeeping bug, never a legitimate value.
struct NotConstantError : std::domain_error {
  using std::domain_error::domain_error;
};

// A one-parameter subgroup that kills one of the tangent weights.
struct InadmissibleSpecializationError : std::domain_error {
  using std::domain_error::domain_error;
};

// Ray data that is not a smooth complete fan in cyclic order.
struct InvalidFanError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad command-line or JSON input.  The CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace tautchi
