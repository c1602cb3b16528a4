#pragma once

#include <stdexcept>
#include <string>

namespace salemlab {

// Error conditions surfaced by the library. The CLI maps these to exit
// codes: config/precondition errors exit 2, I/O errors exit 3, and an
// InternalCheckFailed (an exact identity violated) exits 1.
enum class ErrorCode {
    NonPrime,
    EvenCharacteristic,
    ReducibleModulus,
    DimensionMismatch,
    GridTooLarge,
    BudgetExceeded,
    UnsupportedRegime,
    ExhaustedAttempts,
    OddProduct,
    ZeroNormal,
    ZeroRadius,
    MissingWeight,
    DivisionByZero,
    ReductionMismatch,
    ParseError,
    IoError,
    InternalCheckFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace salemlab
