#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

enum class ErrorKind {
    DivisionByZero,
    InvalidExponentSystem,
    DimensionMismatch,
    ContextMismatch,
    NotInSubalgebra,
    ZeroElement,
    NotUnitary,
    NonUnitLeadingCoefficient,
    NonCommutativeCoefficients,
    SearchSpaceTooLarge,
    BudgetExceeded,
    UnsupportedRank,
    ZeroCharacterValue,
    WrongMode,
    Parse,
    Config,
    Overflow,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qtorus
