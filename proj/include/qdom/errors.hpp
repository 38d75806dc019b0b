#pragma once

#include <stdexcept>
#include <string>

namespace qdom {

// Bad parameters, mismatched orders or variable lists, malformed input.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reciprocal of a series whose constant term is zero.
struct SingularSeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

// Expansion requested for a denominator factor that is not a unit.
struct SingularDenominatorError : std::domain_error {
  using std::domain_error::domain_error;
};

// Truncation bounds do not cover every monomial that contributes.
struct CoverageError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Enumeration or sweep exceeded a configured cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInImageError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace qdom
