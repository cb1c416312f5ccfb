#include "fhsforge/bounds.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <tuple>

#include "fhsforge/error.hpp"
#include "fhsforge/fhs.hpp"
#include "fhsforge/parallel.hpp"

namespace fhsforge {

namespace {

template <typename Int>
Int ceil_div_generic(const Int& a, const Int& b)
{
    if (a >= 0)
        return (a + b - 1) / b;
    return -((-a) / b);
}

void check_degenerate(const BigInt& n, const BigInt& big_n, const BigInt& ell)
{
    if (n < 1 || big_n < 1 || ell < 1 || n * big_n < 2)
        throw Error(ErrorKind::DegenerateParameters, "Peng-Fan bounds need n, N, ell >= 1 and nN >= 2");
}

void check_size_bound(std::uint64_t n, std::uint64_t lambda, std::uint64_t ell)
{
    if (lambda >= n || ell <= 1)
        throw Error(ErrorKind::PreconditionViolated, "size bounds need lambda < n and ell > 1");
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp)
{
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// Numerators and denominators of PF1 and PF2 for one triple.
template <typename Int>
struct PengFanTerms {
    Int num1, den1, num2, den2, i, j;

    PengFanTerms(const Int& n, const Int& big_n, const Int& ell)
    {
        const Int nn = n * big_n;
        i = nn / ell;
        j = nn - i * ell;
        num1 = (nn - ell) * n;
        den1 = (nn - 1) * ell;
        num2 = 2 * i * nn - (i + 1) * i * ell;
        den2 = (nn - 1) * big_n;
    }
};

template <typename Int>
std::optional<std::string> check_triple(const Int& n, const Int& big_n, const Int& ell, bool& exact)
{
    const PengFanTerms<Int> t(n, big_n, ell);
    const Int c1 = ceil_div_generic(t.num1, t.den1);
    const Int c2 = ceil_div_generic(t.num2, t.den2);
    exact = t.j == 0;
    if (c1 != c2)
        return std::string("ceilings differ");
    // Both sides over the common denominator (nN - 1) ell N.
    if (t.num2 * ell - t.num1 * big_n != (ell - t.j) * t.j)
        return std::string("difference identity fails");
    if (t.num2 * t.den1 < t.num1 * t.den2)
        return std::string("PF2 < PF1");
    if (exact && t.num2 * t.den1 != t.num1 * t.den2)
        return std::string("J = 0 but PF1 != PF2");
    return std::nullopt;
}

} // namespace

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    if (a >= 0)
        return a / b;
    return -ceil_div_generic<BigInt>(-a, b);
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    return ceil_div_generic<BigInt>(a, b);
}

Rational peng_fan_1_value(const BigInt& n, const BigInt& big_n, const BigInt& ell)
{
    check_degenerate(n, big_n, ell);
    const PengFanTerms<BigInt> t(n, big_n, ell);
    return Rational(t.num1, t.den1);
}

Rational peng_fan_2_value(const BigInt& n, const BigInt& big_n, const BigInt& ell)
{
    check_degenerate(n, big_n, ell);
    const PengFanTerms<BigInt> t(n, big_n, ell);
    return Rational(t.num2, t.den2);
}

BigInt peng_fan_1(const BigInt& n, const BigInt& big_n, const BigInt& ell)
{
    check_degenerate(n, big_n, ell);
    const PengFanTerms<BigInt> t(n, big_n, ell);
    return ceil_div(t.num1, t.den1);
}

BigInt peng_fan_2(const BigInt& n, const BigInt& big_n, const BigInt& ell)
{
    check_degenerate(n, big_n, ell);
    const PengFanTerms<BigInt> t(n, big_n, ell);
    return ceil_div(t.num2, t.den2);
}

BigInt singleton_max_size(std::uint64_t n, std::uint64_t lambda, std::uint64_t ell)
{
    check_size_bound(n, lambda, ell);
    return big_pow(ell, lambda + 1) / n;
}

BigInt sphere_packing_max_size(std::uint64_t n, std::uint64_t lambda, std::uint64_t ell)
{
    check_size_bound(n, lambda, ell);
    const std::uint64_t radius = (n - lambda - 1) / 2;
    BigInt ball = 0;
    BigInt binom = 1;     // C(n, i)
    BigInt spread = 1;    // (ell - 1)^i
    for (std::uint64_t i = 0; i <= radius; ++i) {
        ball += binom * spread;
        binom = binom * (n - i) / (i + 1);
        spread *= ell - 1;
    }
    return big_pow(ell, n) / (BigInt(n) * ball);
}

IdentitySweepReport peng_fan_identity_sweep(
    std::uint64_t n_max, std::uint64_t big_n_max, std::uint64_t ell_max, unsigned threads)
{
    IdentitySweepReport report;
    report.n_max = n_max;
    report.big_n_max = big_n_max;
    report.ell_max = ell_max;

    // Largest intermediate is about 2 (nN)^3 ell; stay in 64-bit when that fits.
    const long double nn = static_cast<long double>(n_max) * static_cast<long double>(big_n_max);
    const bool small = 2.0L * nn * nn * nn * static_cast<long double>(ell_max) < 4.0e18L;

    std::mutex merge;
    parallel_slices(n_max, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        IdentitySweepReport local;
        for (std::uint64_t n = begin + 1; n <= end; ++n) {
            for (std::uint64_t big_n = 1; big_n <= big_n_max; ++big_n) {
                for (std::uint64_t ell = 1; ell <= ell_max; ++ell) {
                    const std::uint64_t product = n * big_n;
                    if (product < std::max<std::uint64_t>(ell, 2)) {
                        ++local.triples_skipped;
                        continue;
                    }
                    bool exact = false;
                    std::optional<std::string> failure;
                    if (small) {
                        failure = check_triple<std::int64_t>(static_cast<std::int64_t>(n),
                            static_cast<std::int64_t>(big_n), static_cast<std::int64_t>(ell), exact);
                    } else {
                        failure = check_triple<BigInt>(BigInt(n), BigInt(big_n), BigInt(ell), exact);
                    }
                    ++local.triples_checked;
                    local.exact_equalities += exact;
                    if (failure)
                        local.counterexamples.push_back({n, big_n, ell, *failure});
                }
            }
        }
        std::lock_guard lock(merge);
        report.triples_checked += local.triples_checked;
        report.triples_skipped += local.triples_skipped;
        report.exact_equalities += local.exact_equalities;
        report.counterexamples.insert(
            report.counterexamples.end(), local.counterexamples.begin(), local.counterexamples.end());
    });
    std::sort(report.counterexamples.begin(), report.counterexamples.end(), [](const auto& a, const auto& b) {
        return std::tie(a.n, a.big_n, a.ell) < std::tie(b.n, b.big_n, b.ell);
    });
    return report;
}

BoundReport optimality_report(
    std::uint64_t n, const BigInt& big_n, std::uint64_t ell, std::uint64_t lambda, bool lambda_verified)
{
    if (n < 1 || big_n < 1 || ell < 1 || BigInt(n) * big_n < 2)
        throw Error(ErrorKind::InconsistentParameters, "bound report needs n, N, ell >= 1 and nN >= 2");
    if (lambda > n)
        throw Error(ErrorKind::InconsistentParameters, "lambda cannot exceed the sequence length");
    BoundReport r;
    r.n = n;
    r.big_n = big_n;
    r.ell = ell;
    r.lambda = lambda;
    r.lambda_verified = lambda_verified;
    const BigInt nn = BigInt(n) * big_n;
    r.i = nn / ell;
    r.j = nn - r.i * ell;
    r.pf1 = peng_fan_1(BigInt(n), big_n, BigInt(ell));
    r.pf2 = peng_fan_2(BigInt(n), big_n, BigInt(ell));
    r.meets_peng_fan = BigInt(lambda) == r.pf2;
    if (lambda < n && ell > 1) {
        r.singleton_max_n = singleton_max_size(n, lambda, ell);
        r.sphere_max_n = sphere_packing_max_size(n, lambda, ell);
        r.meets_singleton = big_n == *r.singleton_max_n;
        r.meets_sphere = big_n == *r.sphere_max_n;
    }
    return r;
}

BoundReport optimality_report(const FhsSet& set, std::uint64_t lambda, bool lambda_verified)
{
    return optimality_report(set.length(), BigInt(set.size()), set.alphabet_size(), lambda, lambda_verified);
}

} // namespace fhsforge
