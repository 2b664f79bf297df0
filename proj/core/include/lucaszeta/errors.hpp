#pragma once

#include <stdexcept>
#include <string>

namespace lucaszeta {

// Every failure mode the library reports. CLI maps these to exit code 1
// and a machine-readable diagnostic on stderr.
enum class ErrorCode {
    QZero,
    NonPositiveP,
    ConstraintViolated,
    MixedDiscriminants,
    DivisibilityError,
    ZeroCharacterValue,
    OutOfDomain,
    MixedModuli,
    PartialProductBound,
    AccuracyUnreachable,
    PoleProximity,
    InnerPole,
    NonIsolatedPole,
    NoConvergence,
    PrincipalCharacter,
    SingularPoint,
    NotRational,
    SquareDiscriminant,
    NonQuadraticCharacter,
    NonRationalCharacter,
    BadInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace lucaszeta
