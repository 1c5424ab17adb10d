#ifndef QFIELD_ERROR_HPP
#define QFIELD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfield {

/* Domain error kinds. The numeric values are shared with the C API
 * (qf_status in qfield.h), so do not reorder. */
enum class ErrorCode : int {
    NotSquarefree = 1,
    DegenerateD = 2,
    FieldMismatch = 3,
    ZeroIdeal = 4,
    ZeroElement = 5,
    NotPrime = 6,
    NonPositive = 7,
    NotUFD = 8,
    SearchExhausted = 9,
    NotImaginary = 10,
    OutOfRange = 11,
    ParseError = 12,
    NonCanonical = 13,
    InvalidArgument = 14,
    Internal = 15,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, std::string const& detail);

}  // namespace qfield

#endif  // QFIELD_ERROR_HPP
