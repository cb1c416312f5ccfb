#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fhsforge/bounds.hpp"
#include "fhsforge/cyclic.hpp"
#include "fhsforge/fhs.hpp"

namespace fhsforge {

enum class Family { A, B, C, Ding };

std::string_view to_string(Family family);

/*
 * Parameters of one family instance.
 *
 *   A: q = 2^m (m > 1), n = q + 1, 1 <= k <= min(p - 1, s) with p the smallest
 *      prime divisor of q + 1 and s = 2^(m-1).
 *   B: q an odd prime power, n = q + 1.
 *   C: n > 1 an odd divisor of q + 1, 0 <= k <= (n - 3)/2 - M, M the largest
 *      integer <= (n - 3)/2 sharing a factor with n (0 if none).
 */
struct FamilyParams {
    Family family = Family::A;
    std::uint64_t q = 0;
    unsigned n = 0;
    unsigned k = 0;
    unsigned m = 0;         // A: q = 2^m
    std::uint64_t p = 0;    // A: smallest prime divisor of q + 1
    unsigned s = 0;         // A: 2^(m-1)
    unsigned big_m = 0;     // C
};

FamilyParams family_a_params(unsigned m, unsigned k);
FamilyParams family_b_params(std::uint64_t q);
FamilyParams family_c_params(std::uint64_t q, unsigned n, unsigned k);

/// Largest M <= (n-3)/2 with gcd(M, n) > 1, or 0 when there is none.
/// (n-1)/2 never qualifies since it is coprime to n.
unsigned largest_noncoprime_index(unsigned n);

// The underlying MDS codes. These only check that the code itself exists
// (A: 1 <= k <= 2^(m-1); C: 0 <= k <= (n-3)/2), not the full-orbit window,
// so they can also be used to probe instances just outside it.

/// [q+1, 2k+1, q-2k+1] over GF(2^m), parity check (x-1) M_1 ... M_k.
CyclicCode family_a_code(unsigned m, unsigned k);
/// [q+1, 3, q-1] over GF(q), parity check (x-1)(x-alpha)(x-alpha^-1).
CyclicCode family_b_code(std::uint64_t q);
/// [n, 2k+2, n-2k-1] over GF(q), parity check M_{(n-1)/2} ... M_{(n-1)/2-k}.
CyclicCode family_c_code(std::uint64_t q, unsigned n, unsigned k);
CyclicCode family_code(const FamilyParams& params);

/// (n, N, lambda; ell) as asserted for the family.
struct ClaimedParameters {
    unsigned n = 0;
    BigInt big_n;
    unsigned lambda = 0;
    std::uint64_t ell = 0;
};

ClaimedParameters claimed_parameters(const FamilyParams& params);

enum class CorrelationCheck { exhaustive, sampled, none };

std::string_view to_string(CorrelationCheck check);

struct VerificationPolicy {
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    double correlation_budget = kDefaultCorrelationBudget;
    /// Sampled correlation is only attempted when a seed is given.
    std::optional<std::uint64_t> sample_seed;
    std::uint64_t samples = 1'000'000;
    unsigned threads = 1;
    bool params_only = false;
    bool check_min_distance = true;
    /// Stop the pairwise sweep once the distance-derived upper bound is hit.
    bool early_exit = false;
};

class FamilyInstance {
public:
    FamilyInstance(FamilyParams params, CyclicCode code, ClaimedParameters claimed);

    FamilyParams params;
    CyclicCode code;
    ClaimedParameters claimed;

    bool orbit_condition = false; // full orbits, decided arithmetically
    std::optional<FhsSet> set;    // present when the code was enumerated
    bool class_count_verified = false;
    std::optional<unsigned> min_distance;
    CorrelationCheck correlation = CorrelationCheck::none;
    std::optional<unsigned> measured_lambda; // exhaustive only
    std::optional<SampledCorrelation> sampled;
    BoundReport report;

    bool materialized() const { return set.has_value(); }
    /// Class count and exhaustive M(F) both match the claim.
    bool fully_verified() const;
    /// Something was measured and disagrees with the claim.
    bool claim_mismatch() const;
};

FamilyInstance build_family(const FamilyParams& params, const VerificationPolicy& policy = {});

} // namespace fhsforge
