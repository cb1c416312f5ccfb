#include "fhsforge/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fhsforge/error.hpp"

namespace fhsforge {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotCosetClosed: return "NotCosetClosed";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::DoesNotContainAllOnes: return "DoesNotContainAllOnes";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::GcdCondition: return "GcdCondition";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::PredicateFailed: return "PredicateFailed";
    case ErrorKind::ClassSizeNotFull: return "ClassSizeNotFull";
    case ErrorKind::LengthAlphabetViolation: return "LengthAlphabetViolation";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InconsistentParameters: return "InconsistentParameters";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::NotOddPrimePower: return "NotOddPrimePower";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotOddDivisor: return "NotOddDivisor";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t x)
{
    if (x < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0)
                x /= d;
        }
    }
    if (x > 1)
        out.push_back(x);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t x)
{
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            lo.push_back(d);
            if (d != x / d)
                hi.push_back(x / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::uint64_t smallest_prime_divisor(std::uint64_t x)
{
    if (x < 2)
        throw Error(ErrorKind::PreconditionViolated, "smallest_prime_divisor needs x >= 2");
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return d;
    return x;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    const std::uint64_t p = smallest_prime_divisor(q);
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1)
        return std::nullopt;
    return std::pair<unsigned, unsigned>{static_cast<unsigned>(p), m};
}

unsigned multiplicative_order(std::uint64_t q, std::uint64_t n)
{
    if (n == 0 || std::gcd(q, n) != 1)
        throw Error(ErrorKind::NotCoprime, "multiplicative order needs gcd(q, n) = 1");
    if (n == 1)
        return 1;
    const std::uint64_t base = q % n;
    std::uint64_t acc = base;
    unsigned e = 1;
    while (acc != 1) {
        acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * base) % n);
        ++e;
    }
    return e;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && acc > UINT64_MAX / base)
            return std::nullopt;
        acc *= base;
    }
    return acc;
}

} // namespace fhsforge
