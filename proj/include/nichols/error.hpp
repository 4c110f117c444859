#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

enum class Err {
    DivisionByZero,
    ZeroInput,
    NonInvertibleDivision,
    IndexOutOfRange,
    EqualIndices,
    InvalidDiagonal,
    InvalidEntry,
    NotSymmetrizable,
    Decomposable,
    NotReflectable,
    InhomogeneousInput,
    DegreeTooLarge,
    DenominatorVanishes,
    OrderUndefined,
    OutOfRange,
    HypothesisViolated,
    UnknownSuite,
    ParseError,
    CapExceeded,
    BadInput,
};

const char* err_name(Err e);

class ToolError : public std::runtime_error {
public:
    ToolError(Err code, const std::string& msg);
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

} // namespace nichols
