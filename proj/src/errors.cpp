#include "stringy/errors.hpp"

namespace stringy {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PartOutOfRange: return "PartOutOfRange";
    case ErrorCode::InvalidPlusPart: return "InvalidPlusPart";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::GammaNegative: return "GammaNegative";
    case ErrorCode::NotKlt: return "NotKlt";
    case ErrorCode::SubsetCapExceeded: return "SubsetCapExceeded";
    case ErrorCode::EmptyBucket: return "EmptyBucket";
    case ErrorCode::TrivialCase: return "TrivialCase";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::AnchorNotInSubset: return "AnchorNotInSubset";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidCoeff: return "InvalidCoeff";
    case ErrorCode::TrivialGcd: return "TrivialGcd";
    case ErrorCode::BelowStandingAssumption: return "BelowStandingAssumption";
    case ErrorCode::FractionalExponent: return "FractionalExponent";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace stringy
