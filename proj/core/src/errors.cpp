#include "lucaszeta/errors.hpp"

namespace lucaszeta {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::QZero: return "QZero";
        case ErrorCode::NonPositiveP: return "NonPositiveP";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::MixedDiscriminants: return "MixedDiscriminants";
        case ErrorCode::DivisibilityError: return "DivisibilityError";
        case ErrorCode::ZeroCharacterValue: return "ZeroCharacterValue";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::MixedModuli: return "MixedModuli";
        case ErrorCode::PartialProductBound: return "PartialProductBound";
        case ErrorCode::AccuracyUnreachable: return "AccuracyUnreachable";
        case ErrorCode::PoleProximity: return "PoleProximity";
        case ErrorCode::InnerPole: return "InnerPole";
        case ErrorCode::NonIsolatedPole: return "NonIsolatedPole";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::PrincipalCharacter: return "PrincipalCharacter";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::NotRational: return "NotRational";
        case ErrorCode::SquareDiscriminant: return "SquareDiscriminant";
        case ErrorCode::NonQuadraticCharacter: return "NonQuadraticCharacter";
        case ErrorCode::NonRationalCharacter: return "NonRationalCharacter";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace lucaszeta
