#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nassoc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define NASSOC_DECLARE_ERROR(Name)              \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

NASSOC_DECLARE_ERROR(DivisionByZero);
NASSOC_DECLARE_ERROR(PoleAtZero);
NASSOC_DECLARE_ERROR(TruncationMismatch);
NASSOC_DECLARE_ERROR(NotHomogeneous);
NASSOC_DECLARE_ERROR(IndexOutOfRange);
NASSOC_DECLARE_ERROR(DegreeTooLarge);
NASSOC_DECLARE_ERROR(NotMultilinear);
NASSOC_DECLARE_ERROR(NotQuadratic);
NASSOC_DECLARE_ERROR(ParameterClash);
NASSOC_DECLARE_ERROR(ParametricNotSupported);
NASSOC_DECLARE_ERROR(NotIdempotent);
NASSOC_DECLARE_ERROR(NonSplitOperator);
NASSOC_DECLARE_ERROR(VerificationFailed);
NASSOC_DECLARE_ERROR(SingularForAllT);
NASSOC_DECLARE_ERROR(ShapeMismatch);
NASSOC_DECLARE_ERROR(DimensionMismatch);

#undef NASSOC_DECLARE_ERROR

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnbalancedParens : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace nassoc
