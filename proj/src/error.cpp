#include "ffroots/error.hpp"

namespace ffroots {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

} // namespace ffroots
