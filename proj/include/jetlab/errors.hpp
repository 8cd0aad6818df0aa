#ifndef JETLAB_ERRORS_HPP
#define JETLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetlab {

enum class ErrorCode {
    FieldMismatch,
    TruncationMismatch,
    UnboundVariable,
    ShapeError,
    InvalidSpec,
    NoSingularLocus,
    HomogeneityError,
    OrderTooSmall,
    TooLarge,
    InvalidResolution,
    BudgetExceeded,
    HypothesesFail,
    Undefined,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace jetlab

#endif
