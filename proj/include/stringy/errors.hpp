#pragma once

#include <stdexcept>
#include <string>

namespace stringy {

enum class ErrorCode {
    NotPrime,
    PartOutOfRange,
    InvalidPlusPart,
    ZeroDenominator,
    PoleAtPoint,
    GammaNegative,
    NotKlt,
    SubsetCapExceeded,
    EmptyBucket,
    TrivialCase,
    InvalidOrder,
    OutOfDomain,
    AnchorNotInSubset,
    EmptySubset,
    InvalidCoeff,
    TrivialGcd,
    BelowStandingAssumption,
    FractionalExponent,
    IoError,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Domain error with a machine-checkable code; `what()` carries the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace stringy
