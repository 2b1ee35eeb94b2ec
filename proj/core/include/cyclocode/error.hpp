#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclocode {

enum class ErrorCode {
    NonPrime,
    DegreeTooLarge,
    TooLarge,
    ZeroInput,
    EvenCharacteristic,
    OrderNotDividing,
    NotOneModFour,
    NonIntegralResult,
    GcdE2Violation,
    GcdE1E2Violation,
    ZeroCode,
    MomentMismatch,
    UnsupportedD,
    ParityViolation,
    KDivisibleBy3,
    KEven,
    NoTemplateApplies,
    HypothesisUnmet,
    UnknownTable,
    Mismatch,
    InvariantViolation,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-checkable code
/// alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cyclocode
