#pragma once

#include <stdexcept>

namespace qconc {

// Base type for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error { using Error::Error; };
struct NonHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NormViolation : Error { using Error::Error; };
struct BadDimension : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct BadRank : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };

} // namespace qconc
