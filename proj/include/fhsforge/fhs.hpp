#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fhsforge/cyclic.hpp"

namespace fhsforge {

using Symbol = std::uint32_t;

struct FhsSequence {
    std::vector<Symbol> symbols;

    std::size_t size() const { return symbols.size(); }
    friend auto operator<=>(const FhsSequence&, const FhsSequence&) = default;
};

/// Where a set came from: a family construction or "imported" from a file.
struct Provenance {
    std::string family = "imported";
    std::uint64_t q = 0;
    unsigned k = 0;
    unsigned n = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// N >= 1 pairwise distinct sequences of a common length n over {0..ell-1}.
/// Distinctness is positionwise; a rotation of a sequence is a different sequence.
class FhsSet {
public:
    FhsSet(std::uint64_t ell, std::vector<FhsSequence> sequences, Provenance provenance = {});

    unsigned length() const { return n_; }
    std::uint64_t alphabet_size() const { return ell_; }
    std::size_t size() const { return sequences_.size(); }
    const std::vector<FhsSequence>& sequences() const { return sequences_; }
    const Provenance& provenance() const { return provenance_; }

    /// Cached maximum nontrivial correlation, if measured or loaded.
    std::optional<unsigned> lambda() const { return lambda_; }
    void record_lambda(unsigned lambda) { lambda_ = lambda; }

private:
    unsigned n_ = 0;
    std::uint64_t ell_ = 0;
    std::vector<FhsSequence> sequences_;
    Provenance provenance_;
    std::optional<unsigned> lambda_;
};

/// H_{X,Y}(t) = #{i : x_i = y_{(i+t) mod n}}.
unsigned correlation(const FhsSequence& x, const FhsSequence& y, unsigned shift);

/// max over 1 <= t < n of H_{X,X}(t). Needs n >= 2.
unsigned auto_peak(const FhsSequence& x);
/// max over 0 <= t < n of H_{X,Y}(t).
unsigned cross_peak(const FhsSequence& x, const FhsSequence& y);

inline constexpr double kDefaultCorrelationBudget = 1e10;

struct CorrelationOptions {
    /// Refuse when N^2 * n^2 symbol comparisons would exceed this.
    double budget = kDefaultCorrelationBudget;
    unsigned threads = 1;
    /// When an upper bound on M(F) is already proven (e.g. from the code's
    /// minimum distance), scanning stops as soon as it is attained.
    std::optional<unsigned> proven_upper_bound;
};

/// N^2 * n^2, the naive comparison count the budget is measured against.
double correlation_cost(const FhsSet& set);

/// M(F): the largest out-of-phase autocorrelation or cross-correlation over
/// the whole set. Throws BudgetExceeded above the budget.
unsigned max_nontrivial(const FhsSet& set, const CorrelationOptions& options = {});

/// Lower bound on M(F) from uniformly sampled (X, Y, t) triples; t != 0 when X = Y.
struct SampledCorrelation {
    unsigned lower_bound = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::optional<unsigned> upper_bound; // from the code, when known
};

SampledCorrelation sample_max_nontrivial(const FhsSet& set, std::uint64_t samples, std::uint64_t seed);

/// Which orbits become sequences: nonconstant keeps C \ C_0 (needs n > q and
/// full orbits outside the constants), nonzero keeps D \ {0}.
enum class OrbitSelection { nonconstant, nonzero };

/// One sequence per equivalence class (its least rotation); field element
/// indices are the frequency symbols.
FhsSet classes_to_fhs(std::span<const EquivalenceClass> classes, const CyclicCode& code, OrbitSelection selection,
    Provenance provenance = {});

} // namespace fhsforge
