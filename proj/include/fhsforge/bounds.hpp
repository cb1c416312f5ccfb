#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fhsforge {

class FhsSet;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Mathematical floor/ceiling of a/b for b > 0 (a may be negative).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Peng-Fan lower bounds on M(F) for N sequences of length n over ell symbols,
// with I = floor(nN / ell):
//   pf1 = ceil((nN - ell) n / ((nN - 1) ell))
//   pf2 = ceil((2 I nN - (I + 1) I ell) / ((nN - 1) N))
// All inputs >= 1 and nN >= 2, DegenerateParameters otherwise.
Rational peng_fan_1_value(const BigInt& n, const BigInt& big_n, const BigInt& ell);
Rational peng_fan_2_value(const BigInt& n, const BigInt& big_n, const BigInt& ell);
BigInt peng_fan_1(const BigInt& n, const BigInt& big_n, const BigInt& ell);
BigInt peng_fan_2(const BigInt& n, const BigInt& big_n, const BigInt& ell);

/// floor(ell^(lambda+1) / n). Needs lambda < n and ell > 1.
BigInt singleton_max_size(std::uint64_t n, std::uint64_t lambda, std::uint64_t ell);

/// floor(ell^n / (n * sum_{i=0}^{floor((n-lambda-1)/2)} C(n,i) (ell-1)^i)).
/// Needs lambda < n and ell > 1.
BigInt sphere_packing_max_size(std::uint64_t n, std::uint64_t lambda, std::uint64_t ell);

struct IdentityCounterexample {
    std::uint64_t n = 0, big_n = 0, ell = 0;
    std::string reason;
};

/// Result of checking, for every grid triple with nN >= max(ell, 2):
///   ceil(PF1) = ceil(PF2), PF2 - PF1 = (ell - J) J / ((nN - 1) ell N) exactly, PF2 >= PF1,
/// where nN = I ell + J, 0 <= J < ell.
struct IdentitySweepReport {
    std::uint64_t n_max = 0, big_n_max = 0, ell_max = 0;
    std::uint64_t triples_checked = 0;
    std::uint64_t triples_skipped = 0; // nN < max(ell, 2)
    std::uint64_t exact_equalities = 0; // J = 0, so PF1 = PF2
    std::vector<IdentityCounterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

IdentitySweepReport peng_fan_identity_sweep(
    std::uint64_t n_max, std::uint64_t big_n_max, std::uint64_t ell_max, unsigned threads = 1);

struct BoundReport {
    std::uint64_t n = 0;
    BigInt big_n;
    std::uint64_t ell = 0;
    std::uint64_t lambda = 0;
    bool lambda_verified = false; // measured exhaustively rather than claimed

    BigInt i;      // floor(nN / ell)
    BigInt j;      // nN - I ell
    BigInt pf1, pf2;
    std::optional<BigInt> singleton_max_n; // absent when lambda >= n or ell <= 1
    std::optional<BigInt> sphere_max_n;

    bool meets_peng_fan = false;
    bool meets_singleton = false;
    bool meets_sphere = false;
};

BoundReport optimality_report(
    std::uint64_t n, const BigInt& big_n, std::uint64_t ell, std::uint64_t lambda, bool lambda_verified);
BoundReport optimality_report(const FhsSet& set, std::uint64_t lambda, bool lambda_verified);

} // namespace fhsforge
