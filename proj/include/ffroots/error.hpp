#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffroots {

enum class ErrorCode {
    NotPrime,
    UnsupportedCharacteristic,
    CapExceeded,
    InvalidDegree,
    NotDivisor,
    InvalidCoefficient,
    InvalidExponent,
    PreconditionViolated,
    BudgetExceeded,
    NonConvergence,
    DomainError,
    Overflow,
    InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Budget refusals also carry the estimated cost that tripped the guard.
class BudgetError : public Error {
public:
    BudgetError(double estimate, double budget, const std::string& what)
        : Error(ErrorCode::BudgetExceeded, what), estimate_(estimate), budget_(budget) {}

    double estimate() const noexcept { return estimate_; }
    double budget() const noexcept { return budget_; }

private:
    double estimate_;
    double budget_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) fail(code, what);
}

} // namespace ffroots
