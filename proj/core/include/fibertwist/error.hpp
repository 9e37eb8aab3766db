#pragma once

#include <stdexcept>
#include <string>

namespace fibertwist {

enum class ErrorCode {
    InvalidInput,
    NotFermat,
    NonIntegerGenus,
    CommonDivisor,
    NotFermatCompatible,
    EmptyIntersection,
    NotIsolatedOnX,
    ParityViolation,
    NotGorensteinSurface,
    UnknownFiberType,
    MultipleResiduals,
    Underdetermined,
    MissingThetaEuler,
    InconsistentBudget,
    Overflow,
    InvariantViolation,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fibertwist
