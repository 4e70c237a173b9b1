#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvkit {

enum class ErrorCode {
    ZeroInput,
    ZeroScale,
    NonRationalCoefficients,
    DimensionTooLarge,
    UnsupportedShape,
    UnsupportedSubstitutionShape,
    NoExplicitIdempotents,
    NotSigmaStable,
    NotFundamental,
    NotConstant,
    ShapeMismatch,
    ParseError,
    DivisionByZeroExpression,
    InvalidArgument,
    BudgetExhausted,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// caller-supplied step budget for long enumerations; a null budget means unlimited
struct Budget {
    std::size_t remaining;
    void consume(std::size_t n = 1) {
        if (remaining < n)
            throw Error(ErrorCode::BudgetExhausted, "step budget exhausted");
        remaining -= n;
    }
};

inline void spend(Budget* b, std::size_t n = 1) {
    if (b) b->consume(n);
}

}  // namespace pvkit
