#include "fibertwist/error.hpp"

namespace fibertwist {

const char* to_string(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotFermat: return "NotFermat";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::CommonDivisor: return "CommonDivisor";
    case ErrorCode::NotFermatCompatible: return "NotFermatCompatible";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::NotIsolatedOnX: return "NotIsolatedOnX";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NotGorensteinSurface: return "NotGorensteinSurface";
    case ErrorCode::UnknownFiberType: return "UnknownFiberType";
    case ErrorCode::MultipleResiduals: return "MultipleResiduals";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::MissingThetaEuler: return "MissingThetaEuler";
    case ErrorCode::InconsistentBudget: return "InconsistentBudget";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace fibertwist
