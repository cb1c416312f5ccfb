#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fhsforge {

enum class ErrorKind {
    NonPrimeCharacteristic,
    FieldTooLarge,
    ZeroElement,
    OrderDoesNotDivide,
    FieldMismatch,
    DivisionByZeroPolynomial,
    NotCoprime,
    NotCosetClosed,
    NotInSubfield,
    DoesNotContainAllOnes,
    ZeroCode,
    EnumerationTooLarge,
    GcdCondition,
    LengthMismatch,
    EmptySet,
    InvalidSequence,
    PredicateFailed,
    ClassSizeNotFull,
    LengthAlphabetViolation,
    DegenerateParameters,
    PreconditionViolated,
    InconsistentParameters,
    KOutOfRange,
    NotOddPrimePower,
    NotPrimePower,
    NotOddDivisor,
    BudgetExceeded,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers (the
/// CLI in particular) can map it to an exit status without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace fhsforge
