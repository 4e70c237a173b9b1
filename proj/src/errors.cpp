#include "pvkit/errors.hpp"

namespace pvkit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::NonRationalCoefficients: return "NonRationalCoefficients";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
        case ErrorCode::UnsupportedSubstitutionShape: return "UnsupportedSubstitutionShape";
        case ErrorCode::NoExplicitIdempotents: return "NoExplicitIdempotents";
        case ErrorCode::NotSigmaStable: return "NotSigmaStable";
        case ErrorCode::NotFundamental: return "NotFundamental";
        case ErrorCode::NotConstant: return "NotConstant";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DivisionByZeroExpression: return "DivisionByZeroExpression";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    }
    return "Unknown";
}

}  // namespace pvkit
