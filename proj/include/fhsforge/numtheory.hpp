#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fhsforge {

bool is_prime(std::uint64_t x);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

std::vector<std::uint64_t> divisors(std::uint64_t x);

/// Smallest prime factor of x >= 2, by trial division.
std::uint64_t smallest_prime_divisor(std::uint64_t x);

/// (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

/// Least e >= 1 with q^e = 1 (mod n). Requires gcd(q, n) = 1, n >= 1.
unsigned multiplicative_order(std::uint64_t q, std::uint64_t n);

/// Overflow-checked integer power; nullopt when the result exceeds 2^64 - 1.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

} // namespace fhsforge
