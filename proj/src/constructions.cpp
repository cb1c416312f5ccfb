#include "fhsforge/constructions.hpp"

#include <numeric>
#include <string>

#include "fhsforge/error.hpp"
#include "fhsforge/numtheory.hpp"

namespace fhsforge {

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::Ding: return "Ding";
    }
    return "?";
}

std::string_view to_string(CorrelationCheck check)
{
    switch (check) {
    case CorrelationCheck::exhaustive: return "exhaustive";
    case CorrelationCheck::sampled: return "sampled";
    case CorrelationCheck::none: return "none";
    }
    return "none";
}

unsigned largest_noncoprime_index(unsigned n)
{
    if (n < 3)
        return 0;
    for (unsigned candidate = (n - 3) / 2; candidate >= 1; --candidate)
        if (std::gcd(candidate, n) > 1)
            return candidate;
    return 0;
}

FamilyParams family_a_params(unsigned m, unsigned k)
{
    if (m <= 1 || m > 20)
        throw Error(ErrorKind::PreconditionViolated, "family A needs 1 < m <= 20");
    FamilyParams params;
    params.family = Family::A;
    params.m = m;
    params.q = std::uint64_t{1} << m;
    params.n = static_cast<unsigned>(params.q + 1);
    params.k = k;
    params.p = smallest_prime_divisor(params.q + 1);
    params.s = 1u << (m - 1);
    const std::uint64_t k_max = std::min<std::uint64_t>(params.p - 1, params.s);
    if (k < 1 || k > k_max)
        throw Error(ErrorKind::KOutOfRange,
            "family A with q=" + std::to_string(params.q) + " needs 1 <= k <= " + std::to_string(k_max));
    return params;
}

FamilyParams family_b_params(std::uint64_t q)
{
    const auto pm = prime_power(q);
    if (!pm || pm->first == 2)
        throw Error(ErrorKind::NotOddPrimePower, std::to_string(q) + " is not an odd prime power");
    FamilyParams params;
    params.family = Family::B;
    params.q = q;
    params.n = static_cast<unsigned>(q + 1);
    params.k = 1;
    params.m = pm->second;
    return params;
}

FamilyParams family_c_params(std::uint64_t q, unsigned n, unsigned k)
{
    const auto pm = prime_power(q);
    if (!pm)
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (n <= 1 || n % 2 == 0 || (q + 1) % n != 0)
        throw Error(ErrorKind::NotOddDivisor,
            std::to_string(n) + " is not an odd divisor > 1 of " + std::to_string(q + 1));
    FamilyParams params;
    params.family = Family::C;
    params.q = q;
    params.n = n;
    params.k = k;
    params.m = pm->second;
    params.big_m = largest_noncoprime_index(n);
    const long long k_max = static_cast<long long>((n - 3) / 2) - params.big_m;
    if (static_cast<long long>(k) > k_max)
        throw Error(ErrorKind::KOutOfRange,
            "family C with n=" + std::to_string(n) + " needs 0 <= k <= " + std::to_string(k_max));
    return params;
}

namespace {

// Residues lo..hi (inclusive, no wrap).
std::vector<unsigned> residue_run(unsigned lo, unsigned hi)
{
    std::vector<unsigned> out;
    for (unsigned j = lo; j <= hi; ++j)
        out.push_back(j);
    return out;
}

} // namespace

CyclicCode family_a_code(unsigned m, unsigned k)
{
    if (m <= 1 || m > 20)
        throw Error(ErrorKind::PreconditionViolated, "family A needs 1 < m <= 20");
    const unsigned q = 1u << m;
    if (k < 1 || k > q / 2)
        throw Error(ErrorKind::KOutOfRange, "family A code needs 1 <= k <= 2^(m-1)");
    const unsigned n = q + 1;
    // Defining set C_{k+1} u ... u C_s = {k+1, ..., q-k}.
    const auto z = residue_run(k + 1, n - 1 - k);
    return build_code(n, FiniteField::make(2, m), z);
}

CyclicCode family_b_code(std::uint64_t q)
{
    const auto pm = prime_power(q);
    if (!pm || pm->first == 2)
        throw Error(ErrorKind::NotOddPrimePower, std::to_string(q) + " is not an odd prime power");
    const auto n = static_cast<unsigned>(q + 1);
    // h has roots alpha^0, alpha^1, alpha^{-1} = alpha^q.
    const auto z = residue_run(2, n - 2);
    return build_code(n, FiniteField::make(pm->first, pm->second), z);
}

CyclicCode family_c_code(std::uint64_t q, unsigned n, unsigned k)
{
    const auto pm = prime_power(q);
    if (!pm)
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (n <= 1 || n % 2 == 0 || (q + 1) % n != 0)
        throw Error(ErrorKind::NotOddDivisor,
            std::to_string(n) + " is not an odd divisor > 1 of " + std::to_string(q + 1));
    const unsigned half = (n - 1) / 2;
    if (k > half - 1)
        throw Error(ErrorKind::KOutOfRange, "family C code needs k <= (n-3)/2");
    // h = M_{half} ... M_{half-k}, cosets {j, n-j}; its roots form the run
    // half-k .. n-half+k. Everything else is the defining set.
    std::vector<unsigned> z;
    for (unsigned j = 0; j < n; ++j)
        if (j < half - k || j > n - half + k)
            z.push_back(j);
    return build_code(n, FiniteField::make(pm->first, pm->second), z);
}

CyclicCode family_code(const FamilyParams& params)
{
    switch (params.family) {
    case Family::A: return family_a_code(params.m, params.k);
    case Family::B: return family_b_code(params.q);
    case Family::C: return family_c_code(params.q, params.n, params.k);
    case Family::Ding: return ding_code(params.q, params.m);
    }
    throw Error(ErrorKind::PreconditionViolated, "unknown family");
}

ClaimedParameters claimed_parameters(const FamilyParams& params)
{
    const BigInt q = params.q;
    ClaimedParameters c;
    c.ell = params.q;
    c.n = params.n;
    switch (params.family) {
    case Family::A:
        c.big_n = (boost::multiprecision::pow(q, 2 * params.k + 1) - q) / (q + 1);
        c.lambda = 2 * params.k;
        break;
    case Family::B:
        c.big_n = q * (q - 1);
        c.lambda = 2;
        break;
    case Family::C:
        c.big_n = (boost::multiprecision::pow(q, 2 * params.k + 2) - 1) / params.n;
        c.lambda = 2 * params.k + 1;
        break;
    case Family::Ding:
        throw Error(ErrorKind::PreconditionViolated, "the Ding code carries no claimed FHS parameters");
    }
    return c;
}

FamilyInstance::FamilyInstance(FamilyParams p, CyclicCode c, ClaimedParameters cl)
    : params(std::move(p)), code(std::move(c)), claimed(std::move(cl))
{
}

bool FamilyInstance::fully_verified() const
{
    return materialized() && class_count_verified && correlation == CorrelationCheck::exhaustive &&
           measured_lambda && *measured_lambda == claimed.lambda;
}

bool FamilyInstance::claim_mismatch() const
{
    if (materialized() && !class_count_verified)
        return true;
    if (measured_lambda && *measured_lambda != claimed.lambda)
        return true;
    if (sampled && sampled->lower_bound > claimed.lambda)
        return true;
    return false;
}

FamilyInstance build_family(const FamilyParams& params, const VerificationPolicy& policy)
{
    FamilyInstance inst(params, family_code(params), claimed_parameters(params));
    const bool constant_free = params.family != Family::C;
    inst.orbit_condition = constant_free ? nonconstant_orbits_full(inst.code) : nonzero_orbits_full(inst.code);
    inst.report = optimality_report(inst.claimed.n, inst.claimed.big_n, inst.claimed.ell, inst.claimed.lambda, false);

    const auto words = checked_pow(params.q, inst.code.dimension());
    if (policy.params_only || !words || *words > policy.enumeration_cap)
        return inst;

    const EnumerationOptions enumeration{policy.enumeration_cap, policy.threads};
    if (policy.check_min_distance)
        inst.min_distance = min_distance_exhaustive(inst.code, enumeration);

    const auto classes =
        enumerate_classes(inst.code, constant_free ? Exclude::constants : Exclude::zero_word, enumeration);
    const bool all_full = std::all_of(
        classes.begin(), classes.end(), [&](const EquivalenceClass& c) { return c.size == inst.code.length(); });
    inst.class_count_verified = all_full && BigInt(classes.size()) == inst.claimed.big_n;
    if (!all_full)
        return inst;

    Provenance provenance{std::string(to_string(params.family)), params.q, params.k, params.n};
    inst.set.emplace(classes_to_fhs(classes, inst.code,
        constant_free ? OrbitSelection::nonconstant : OrbitSelection::nonzero, std::move(provenance)));

    const unsigned mds_upper = inst.min_distance ? inst.code.length() - *inst.min_distance
                                                 : inst.code.dimension() - 1;
    if (correlation_cost(*inst.set) <= policy.correlation_budget) {
        CorrelationOptions options;
        options.budget = policy.correlation_budget;
        options.threads = policy.threads;
        if (policy.early_exit && inst.min_distance)
            options.proven_upper_bound = mds_upper;
        inst.measured_lambda = max_nontrivial(*inst.set, options);
        inst.set->record_lambda(*inst.measured_lambda);
        inst.correlation = CorrelationCheck::exhaustive;
        inst.report = optimality_report(*inst.set, *inst.measured_lambda, true);
    } else if (policy.sample_seed) {
        inst.sampled = sample_max_nontrivial(*inst.set, policy.samples, *policy.sample_seed);
        inst.sampled->upper_bound = mds_upper;
        inst.correlation = CorrelationCheck::sampled;
        inst.report = optimality_report(*inst.set, inst.claimed.lambda, false);
    } else {
        inst.report = optimality_report(*inst.set, inst.claimed.lambda, false);
    }
    return inst;
}

} // namespace fhsforge
