#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fhsforge/error.hpp"
#include "fhsforge/numtheory.hpp"

using namespace fhsforge;

TEST_CASE("primality against a sieve")
{
    const std::uint64_t limit = 5000;
    std::vector<bool> composite(limit + 1, false);
    composite[0] = composite[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i)
                composite[j] = true;
    for (std::uint64_t x = 0; x <= limit; ++x)
        CHECK(is_prime(x) == !composite[x]);
}

TEST_CASE("smallest prime divisor")
{
    CHECK(smallest_prime_divisor(9) == 3);
    CHECK(smallest_prime_divisor(17) == 17);
    CHECK(smallest_prime_divisor(65) == 5);
    CHECK(smallest_prime_divisor(257) == 257);
    CHECK(smallest_prime_divisor(1025) == 5);
    // 2^m + 1 with m odd is divisible by 3.
    for (unsigned m = 1; m < 40; m += 2)
        CHECK(smallest_prime_divisor((std::uint64_t{1} << m) + 1) == 3);
    CHECK_THROWS_AS(smallest_prime_divisor(1), Error);
}

TEST_CASE("prime powers")
{
    CHECK(prime_power(8) == std::make_pair(2u, 3u));
    CHECK(prime_power(25) == std::make_pair(5u, 2u));
    CHECK(prime_power(7) == std::make_pair(7u, 1u));
    CHECK(prime_power(512) == std::make_pair(2u, 9u));
    CHECK_FALSE(prime_power(1));
    CHECK_FALSE(prime_power(6));
    CHECK_FALSE(prime_power(12));
    CHECK_FALSE(prime_power(0));
}

TEST_CASE("factors and divisors")
{
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("multiplicative order by direct iteration")
{
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t q = 2; q <= 30; ++q) {
            if (std::gcd(n, q) != 1)
                continue;
            unsigned e = 1;
            std::uint64_t v = q % n;
            while (v != 1 % n) {
                v = v * q % n;
                ++e;
            }
            CHECK(multiplicative_order(q, n) == e);
        }
    }
    CHECK(multiplicative_order(2, 29) == 28);
    CHECK_THROWS_AS(multiplicative_order(4, 6), Error);
}

TEST_CASE("checked power")
{
    CHECK(checked_pow(2, 63) == std::uint64_t{1} << 63);
    CHECK_FALSE(checked_pow(2, 64));
    CHECK(checked_pow(32, 4) == 1048576);
    CHECK(checked_pow(7, 0) == 1);
    CHECK_FALSE(checked_pow(512, 8));
}
