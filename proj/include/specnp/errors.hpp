#pragma once

#include <stdexcept>
#include <string>

namespace specnp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad JSON, bad shapes, data outside the
// domain of an operation. Mapped to exit code 1 by the CLI.
struct InputError : Error {
    using Error::Error;
};

// A computation that started from valid input could not be completed.
// Mapped to exit code 2 by the CLI.
struct NumericalError : Error {
    using Error::Error;
};

struct ConfigError : InputError {
    using InputError::InputError;
};
struct DimensionMismatch : InputError {
    using InputError::InputError;
};
struct ZeroPolynomial : InputError {
    using InputError::InputError;
};
struct NotAnEigenvalue : InputError {
    using InputError::InputError;
};
struct InsufficientDerivatives : InputError {
    using InputError::InputError;
};
struct OutOfDisc : InputError {
    using InputError::InputError;
};
struct SpectrumNotInDisc : InputError {
    using InputError::InputError;
};
struct CoincidentPoints : InputError {
    using InputError::InputError;
};
struct NotUnitary : InputError {
    using InputError::InputError;
};
struct DomainViolation : InputError {
    using InputError::InputError;
};

struct NoConvergence : NumericalError {
    using NumericalError::NumericalError;
};
struct PoleOnSpectrum : NumericalError {
    using NumericalError::NumericalError;
};
struct PoleHit : NumericalError {
    using NumericalError::NumericalError;
};
struct EmptyPreimage : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace specnp
