#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fhsforge/constructions.hpp"
#include "fhsforge/error.hpp"
#include "fhsforge/numtheory.hpp"

using namespace fhsforge;

TEST_CASE("largest non-coprime index")
{
    CHECK(largest_noncoprime_index(27) == 12);
    CHECK(largest_noncoprime_index(11) == 0);
    CHECK(largest_noncoprime_index(3) == 0);
    CHECK(largest_noncoprime_index(9) == 3);
    CHECK(largest_noncoprime_index(15) == 6);
    // Direct scan as an oracle.
    for (unsigned n = 3; n < 400; n += 2) {
        unsigned expect = 0;
        for (unsigned m = 1; 2 * m + 3 <= n; ++m)
            if (std::gcd(m, n) > 1)
                expect = m;
        CHECK(largest_noncoprime_index(n) == expect);
        CHECK(std::gcd((n - 1) / 2, n) == 1);
    }
}

TEST_CASE("family parameter validation")
{
    const auto a = family_a_params(3, 1);
    CHECK(a.q == 8);
    CHECK(a.n == 9);
    CHECK(a.p == 3);
    CHECK(a.s == 4);
    CHECK_NOTHROW(family_a_params(3, 2));
    CHECK_THROWS_AS(family_a_params(3, 3), Error);
    CHECK_THROWS_AS(family_a_params(3, 0), Error);
    CHECK_THROWS_AS(family_a_params(1, 1), Error);
    // q = 16: q + 1 = 17 is prime, so k runs up to s = 8.
    CHECK(family_a_params(4, 8).p == 17);
    CHECK_THROWS_AS(family_a_params(4, 9), Error);

    CHECK(family_b_params(25).n == 26);
    CHECK_THROWS_AS(family_b_params(4), Error);
    CHECK_THROWS_AS(family_b_params(6), Error);
    try {
        family_b_params(4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotOddPrimePower);
    }

    const auto c = family_c_params(512, 27, 0);
    CHECK(c.big_m == 12);
    CHECK_THROWS_AS(family_c_params(512, 27, 1), Error);
    CHECK(family_c_params(32, 11, 4).k == 4);
    CHECK_THROWS_AS(family_c_params(32, 11, 5), Error);
    CHECK_THROWS_AS(family_c_params(32, 9, 0), Error);
    CHECK_NOTHROW(family_c_params(32, 33, 0));
    CHECK_THROWS_AS(family_c_params(32, 35, 0), Error);
    CHECK_THROWS_AS(family_c_params(31, 1, 0), Error);
    CHECK_THROWS_AS(family_c_params(10, 11, 0), Error);
    try {
        family_c_params(32, 9, 0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotOddDivisor);
    }
    try {
        family_a_params(3, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::KOutOfRange);
    }
}

TEST_CASE("claimed parameters")
{
    auto claim = claimed_parameters(family_a_params(3, 1));
    CHECK(claim.n == 9);
    CHECK(claim.big_n == 56);
    CHECK(claim.lambda == 2);
    CHECK(claim.ell == 8);
    CHECK(claimed_parameters(family_a_params(3, 2)).big_n == 3640);
    CHECK(claimed_parameters(family_a_params(4, 1)).big_n == 240);
    CHECK(claimed_parameters(family_a_params(4, 8)).big_n ==
          (boost::multiprecision::pow(BigInt(16), 17) - 16) / 17);
    claim = claimed_parameters(family_b_params(25));
    CHECK(claim.big_n == 600);
    CHECK(claim.lambda == 2);
    CHECK(claimed_parameters(family_c_params(512, 27, 0)).big_n == 9709);
    CHECK(claimed_parameters(family_c_params(32, 11, 0)).big_n == 93);
    claim = claimed_parameters(family_c_params(32, 11, 1));
    CHECK(claim.big_n == 95325);
    CHECK(claim.lambda == 3);
}

TEST_CASE("family codes are MDS with the stated parity checks")
{
    const auto a = family_a_code(3, 2);
    CHECK(a.length() == 9);
    CHECK(a.dimension() == 5);
    CHECK(min_distance_exhaustive(a) == 5);
    CHECK(a.defining_set() == std::vector<unsigned>{3, 4, 5, 6});

    const auto b = family_b_code(5);
    CHECK(b.dimension() == 3);
    CHECK(min_distance_exhaustive(b) == 4);
    CHECK(b.parity_check().degree() == 3);
    for (unsigned j : {0u, 1u, 5u})
        CHECK(b.roots().is_root(b.parity_check(), j));

    const auto c = family_c_code(32, 11, 1);
    CHECK(c.dimension() == 4);
    CHECK(c.contains_constants() == false);
    // h has the consecutive roots 4..7.
    for (unsigned j = 4; j <= 7; ++j)
        CHECK(c.roots().is_root(c.parity_check(), j));
    CHECK(min_distance_exhaustive(family_c_code(32, 11, 0)) == 10);
    CHECK(min_distance_exhaustive(family_c_code(4, 5, 0)) == 4);
    CHECK(min_distance_exhaustive(family_c_code(8, 9, 1)) == 6);

    for (unsigned k = 1; k <= 2; ++k)
        CHECK(min_distance_exhaustive(family_a_code(3, k)) == 9 - (2 * k + 1) + 1);
}

TEST_CASE("family A predicate holds exactly on the accepted window")
{
    for (unsigned m = 2; m <= 6; ++m) {
        const std::uint64_t q = std::uint64_t{1} << m;
        const auto p = smallest_prime_divisor(q + 1);
        for (unsigned k = 1; k <= q / 2; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            const bool accepted = k <= std::min<std::uint64_t>(p - 1, q / 2);
            CHECK(nonconstant_orbits_full(family_a_code(m, k)) == accepted);
            bool coprime = true;
            for (unsigned j = 1; j <= k; ++j)
                coprime = coprime && std::gcd<std::uint64_t>(j, q + 1) == 1;
            CHECK(coprime == accepted);
        }
    }
}

TEST_CASE("family C predicate holds on the accepted window")
{
    struct Case {
        std::uint64_t q;
        unsigned n;
    };
    for (auto [q, n] : std::vector<Case>{{32, 11}, {8, 9}, {512, 27}, {4, 5}, {29, 15}, {27, 7}}) {
        const unsigned big_m = largest_noncoprime_index(n);
        for (unsigned k = 0; k + big_m <= (n - 3) / 2; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(nonzero_orbits_full(family_c_code(q, n, k)));
        }
        // One past the window fails whenever M > 0.
        if (big_m > 0)
            CHECK_FALSE(nonzero_orbits_full(family_c_code(q, n, (n - 3) / 2 - big_m + 1)));
    }
}

TEST_CASE("materialized instances")
{
    SUBCASE("A, q=8, k=1")
    {
        const auto inst = build_family(family_a_params(3, 1));
        REQUIRE(inst.materialized());
        CHECK(inst.orbit_condition);
        CHECK(inst.class_count_verified);
        CHECK(inst.set->size() == 56);
        CHECK(inst.min_distance == 7u);
        CHECK(inst.correlation == CorrelationCheck::exhaustive);
        CHECK(inst.measured_lambda == 2u);
        CHECK(inst.fully_verified());
        CHECK_FALSE(inst.claim_mismatch());
        CHECK(inst.report.meets_singleton);
        CHECK(inst.report.lambda_verified);
        CHECK(inst.set->provenance().family == "A");
    }
    SUBCASE("B, q=5 with threads")
    {
        VerificationPolicy policy;
        policy.threads = 3;
        const auto inst = build_family(family_b_params(5), policy);
        CHECK(inst.set->size() == 20);
        CHECK(inst.measured_lambda == 2u);
        CHECK(inst.report.meets_peng_fan);
        CHECK(inst.report.meets_singleton);
    }
    SUBCASE("C, q=32, n=11, k=0")
    {
        const auto inst = build_family(family_c_params(32, 11, 0));
        CHECK(inst.set->size() == 93);
        CHECK(inst.measured_lambda == 1u);
        CHECK(inst.report.meets_peng_fan);
        CHECK(inst.report.meets_singleton);
        CHECK(inst.fully_verified());
    }
    SUBCASE("C, q=32, n=11, k=1 is sampled above a tight budget")
    {
        VerificationPolicy policy;
        policy.correlation_budget = 1e6;
        policy.sample_seed = 5;
        policy.samples = 20000;
        policy.check_min_distance = false;
        const auto inst = build_family(family_c_params(32, 11, 1), policy);
        CHECK(inst.class_count_verified);
        CHECK(inst.set->size() == 95325);
        CHECK(inst.correlation == CorrelationCheck::sampled);
        REQUIRE(inst.sampled);
        CHECK(inst.sampled->lower_bound <= 3);
        CHECK(inst.sampled->upper_bound == 3u);
        CHECK_FALSE(inst.fully_verified());
        CHECK_FALSE(inst.claim_mismatch());
        CHECK(inst.report.meets_singleton);
    }
    SUBCASE("no seed means no correlation check")
    {
        VerificationPolicy policy;
        policy.correlation_budget = 10;
        const auto inst = build_family(family_b_params(5), policy);
        CHECK(inst.materialized());
        CHECK(inst.correlation == CorrelationCheck::none);
        CHECK_FALSE(inst.fully_verified());
    }
}

TEST_CASE("parameters-only instances")
{
    const auto inst = build_family(family_a_params(4, 8));
    CHECK_FALSE(inst.materialized());
    CHECK(inst.orbit_condition);
    CHECK(inst.correlation == CorrelationCheck::none);
    CHECK(inst.report.meets_singleton);
    CHECK_FALSE(inst.report.lambda_verified);
    CHECK(inst.report.big_n == (boost::multiprecision::pow(BigInt(16), 17) - 16) / 17);

    VerificationPolicy forced;
    forced.params_only = true;
    const auto b = build_family(family_b_params(25), forced);
    CHECK_FALSE(b.materialized());
    CHECK(b.report.meets_singleton);
    CHECK(b.report.meets_peng_fan);

    VerificationPolicy small_cap;
    small_cap.enumeration_cap = 1000;
    CHECK_FALSE(build_family(family_a_params(3, 2), small_cap).materialized());
}

TEST_CASE("every listed instance meets Singleton on claimed parameters")
{
    VerificationPolicy policy;
    policy.params_only = true;
    for (unsigned m = 2; m <= 8; ++m) {
        const auto p = smallest_prime_divisor((std::uint64_t{1} << m) + 1);
        const unsigned k_max = static_cast<unsigned>(std::min<std::uint64_t>(p - 1, std::uint64_t{1} << (m - 1)));
        for (unsigned k = 1; k <= k_max; ++k)
            CHECK(build_family(family_a_params(m, k), policy).report.meets_singleton);
    }
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125})
        CHECK(build_family(family_b_params(q), policy).report.meets_singleton);
    for (std::uint64_t q : {4, 8, 16, 32, 64, 128, 256, 512, 9, 27, 81, 29}) {
        for (unsigned n = 3; n <= q + 1; n += 2) {
            if ((q + 1) % n != 0)
                continue;
            const unsigned k_max = (n - 3) / 2 - largest_noncoprime_index(n);
            for (unsigned k = 0; k <= k_max; ++k) {
                const auto inst = build_family(family_c_params(q, n, k), policy);
                CHECK(inst.report.meets_singleton);
                if (k == 0)
                    CHECK(inst.report.meets_peng_fan);
            }
        }
    }
}
