#pragma once

#include <stdexcept>
#include <string>

namespace mim {

// Two failure families, matching the CLI exit codes: configuration /
// validation problems (exit 2) and numerical failures at run time (exit 3).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveRate : ConfigError {
    using ConfigError::ConfigError;
};

struct ZeroDetuning : ConfigError {
    using ConfigError::ConfigError;
};

struct NegativeAmplitude : ConfigError {
    using ConfigError::ConfigError;
};

struct TunnelingNotZero : ConfigError {
    using ConfigError::ConfigError;
};

struct DomainError : ConfigError {
    using ConfigError::ConfigError;
};

struct DegenerateDrive : ConfigError {
    using ConfigError::ConfigError;
};

struct StepSizeUnderflow : NumericalError {
    using NumericalError::NumericalError;
};

struct CommutatorDrift : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureNotConverged : NumericalError {
    using NumericalError::NumericalError;
};

struct NegativePhonon : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularLyapunov : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace mim
