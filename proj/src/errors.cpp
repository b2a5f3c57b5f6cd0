#include "coopshare/errors.hpp"

namespace coopshare {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingCoalition: return "MissingCoalition";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::PlayerInCoalition: return "PlayerInCoalition";
    case ErrorCode::PlayerNotInGround: return "PlayerNotInGround";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::NotSimpleGame: return "NotSimpleGame";
    case ErrorCode::NotSuperadditive: return "NotSuperadditive";
    case ErrorCode::ZeroGame: return "ZeroGame";
    case ErrorCode::ScopeTooLarge: return "ScopeTooLarge";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "Error";
}

} // namespace coopshare
