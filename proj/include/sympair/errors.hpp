#pragma once

#include <stdexcept>
#include <string>

namespace sympair {

// Base for everything this library throws on bad input or overflow.
// Catching sympair::Error at the CLI boundary maps cleanly onto the
// usage-error exit code; std::exception still catches everything.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field construction
struct NotPrime : Error { using Error::Error; };
struct NotPrimePower : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// Element / arithmetic misuse
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// Polynomials
struct ZeroLeading : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };

// Vectors / metrics
struct LengthMismatch : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };

// Code parameters
struct BadDimension : Error { using Error::Error; };
struct BadM : Error { using Error::Error; };
struct BadPoints : Error { using Error::Error; };
struct BadDp : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };

}  // namespace sympair
