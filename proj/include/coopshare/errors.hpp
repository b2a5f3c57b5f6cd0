#pragma once

#include <stdexcept>
#include <string>

namespace coopshare {

enum class ErrorCode {
    ParseError,
    MissingCoalition,
    NotNormalized,
    NotMonotone,
    BadPermutation,
    NegativeValue,
    PlayerInCoalition,
    PlayerNotInGround,
    StepOutOfRange,
    NotSimpleGame,
    NotSuperadditive,
    ZeroGame,
    ScopeTooLarge,
    InternalError,
};

const char* error_code_name(ErrorCode code);

/// All domain failures are thrown as Error; `code` selects the condition,
/// `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace coopshare
