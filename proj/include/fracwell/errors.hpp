#pragma once

#include <stdexcept>
#include <string>

namespace fracwell {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// A lower hypergeometric parameter sits at a nonpositive integer.
struct PoleInParameter : Error {
    using Error::Error;
};

// A series or continued fraction failed to meet tolerance within max_terms.
struct NoConvergence : Error {
    using Error::Error;
};

// upper_gamma evaluated at the branch point z = 0 with nonpositive order.
struct BranchPointArgument : Error {
    using Error::Error;
};

// Argument outside the validated accuracy window of an approximation.
struct OutOfValidatedRange : Error {
    using Error::Error;
};

// alpha = 2 requested from an operation defined only for alpha < 2.
struct ClassicalEndpoint : Error {
    using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget.
struct ToleranceNotMet : Error {
    using Error::Error;
};

// A Taylor coefficient exceeded the magnitude guard (N too large for
// double at the given q).
struct SeriesOverflow : Error {
    using Error::Error;
};

// The pseudo-normalization anchor value is too small to divide by.
struct AnchorDegenerate : Error {
    using Error::Error;
};

// Closed-form eigenfunction evaluated at x = 0 where its power prefactor
// diverges.
struct SingularOrigin : Error {
    using Error::Error;
};

// Zero scan ran out of validated Mittag-Leffler window before finding the
// requested number of zeros.
struct WindowExhausted : Error {
    using Error::Error;
};

} // namespace fracwell
