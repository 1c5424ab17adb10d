#include "qfield/error.hpp"

namespace qfield {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DegenerateD: return "DegenerateD";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NotUFD: return "NotUFD";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotImaginary: return "NotImaginary";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

void raise(ErrorCode code, std::string const& detail)
{
    throw Error(code, std::string(error_name(code)) + ": " + detail);
}

}  // namespace qfield
