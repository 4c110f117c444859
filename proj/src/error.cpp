#include "nichols/error.hpp"

namespace nichols {

const char* err_name(Err e) {
    switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ZeroInput: return "ZeroInput";
    case Err::NonInvertibleDivision: return "NonInvertibleDivision";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::EqualIndices: return "EqualIndices";
    case Err::InvalidDiagonal: return "InvalidDiagonal";
    case Err::InvalidEntry: return "InvalidEntry";
    case Err::NotSymmetrizable: return "NotSymmetrizable";
    case Err::Decomposable: return "Decomposable";
    case Err::NotReflectable: return "NotReflectable";
    case Err::InhomogeneousInput: return "InhomogeneousInput";
    case Err::DegreeTooLarge: return "DegreeTooLarge";
    case Err::DenominatorVanishes: return "DenominatorVanishes";
    case Err::OrderUndefined: return "OrderUndefined";
    case Err::OutOfRange: return "OutOfRange";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::ParseError: return "ParseError";
    case Err::CapExceeded: return "CapExceeded";
    case Err::BadInput: return "BadInput";
    }
    return "Unknown";
}

ToolError::ToolError(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw ToolError(code, msg); }

} // namespace nichols
