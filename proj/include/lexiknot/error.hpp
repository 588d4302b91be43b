#pragma once

#include <stdexcept>
#include <string>

namespace lexiknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// alpha <= 1: unknot or degenerate fraction
struct DegenerateFraction : Error { using Error::Error; };

// formula precondition (zero entries, islets) not met
struct PreconditionError : Error { using Error::Error; };

struct PatternMismatch : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };

// tangency, cusp, triple point or coincident crossing abscissae
struct NonNodal : Error { using Error::Error; };

struct EpsilonTooLarge : Error { using Error::Error; };
struct NonInjective : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };

}  // namespace lexiknot
