#include "fhsforge/fhs.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <string>

#include "fhsforge/error.hpp"
#include "fhsforge/parallel.hpp"

namespace fhsforge {

FhsSet::FhsSet(std::uint64_t ell, std::vector<FhsSequence> sequences, Provenance provenance)
    : ell_(ell), sequences_(std::move(sequences)), provenance_(std::move(provenance))
{
    if (sequences_.empty())
        throw Error(ErrorKind::EmptySet, "an FHS set needs at least one sequence");
    n_ = static_cast<unsigned>(sequences_.front().size());
    if (n_ == 0)
        throw Error(ErrorKind::InvalidSequence, "sequences must be nonempty");
    for (const auto& s : sequences_) {
        if (s.size() != n_)
            throw Error(ErrorKind::LengthMismatch, "sequences of different lengths");
        for (Symbol v : s.symbols)
            if (v >= ell_)
                throw Error(ErrorKind::InvalidSequence,
                    "symbol " + std::to_string(v) + " outside an alphabet of size " + std::to_string(ell_));
    }
    std::vector<const FhsSequence*> order;
    order.reserve(sequences_.size());
    for (const auto& s : sequences_)
        order.push_back(&s);
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return *a < *b; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (*order[i] == *order[i - 1])
            throw Error(ErrorKind::InvalidSequence, "sequences are not pairwise distinct");
}

unsigned correlation(const FhsSequence& x, const FhsSequence& y, unsigned shift)
{
    const std::size_t n = x.size();
    if (y.size() != n)
        throw Error(ErrorKind::LengthMismatch, "correlation of sequences with different lengths");
    if (shift >= n)
        throw Error(ErrorKind::PreconditionViolated, "shift must be below the sequence length");
    unsigned hits = 0;
    for (std::size_t i = 0; i < n; ++i)
        hits += x.symbols[i] == y.symbols[(i + shift) % n];
    return hits;
}

unsigned auto_peak(const FhsSequence& x)
{
    if (x.size() < 2)
        throw Error(ErrorKind::DegenerateParameters, "autocorrelation peak needs n >= 2");
    unsigned best = 0;
    for (unsigned t = 1; t < x.size(); ++t)
        best = std::max(best, correlation(x, x, t));
    return best;
}

unsigned cross_peak(const FhsSequence& x, const FhsSequence& y)
{
    if (y.size() != x.size())
        throw Error(ErrorKind::LengthMismatch, "correlation of sequences with different lengths");
    unsigned best = 0;
    for (unsigned t = 0; t < x.size(); ++t)
        best = std::max(best, correlation(x, y, t));
    return best;
}

double correlation_cost(const FhsSet& set)
{
    const double big_n = static_cast<double>(set.size());
    const double n = set.length();
    return big_n * big_n * n * n;
}

namespace {

/*
 * For a fixed X, occurrence lists (head/next) map each symbol to the
 * positions where X carries it. Then for any Y, H_{X,Y}(t) is accumulated by
 * walking y_j's occurrences i in X and bumping t = j - i. The work per pair is
 * n plus the number of agreeing (i, j) pairs, which is sum_t H_{X,Y}(t).
 */
class PeakScanner {
public:
    PeakScanner(const std::vector<std::vector<std::uint32_t>>& dense, std::size_t alphabet)
        : dense_(dense), n_(dense.front().size()), head_(alphabet, -1), next_(n_), counts_(n_)
    {
    }

    void load(std::size_t a)
    {
        const auto& x = dense_[a];
        for (std::size_t i = 0; i < n_; ++i) {
            next_[i] = head_[x[i]];
            head_[x[i]] = static_cast<int>(i);
        }
        loaded_ = a;
    }

    void unload()
    {
        for (auto s : dense_[loaded_])
            head_[s] = -1;
    }

    /// Peak of H_{X,Y}(t) over the admissible shifts; t = 0 skipped when Y is X.
    unsigned peak(std::size_t b)
    {
        std::fill(counts_.begin(), counts_.end(), 0u);
        const auto& y = dense_[b];
        for (std::size_t j = 0; j < n_; ++j)
            for (int i = head_[y[j]]; i >= 0; i = next_[i])
                ++counts_[(j + n_ - static_cast<std::size_t>(i)) % n_];
        const std::size_t first = b == loaded_ ? 1 : 0;
        unsigned best = 0;
        for (std::size_t t = first; t < n_; ++t)
            best = std::max(best, counts_[t]);
        return best;
    }

private:
    const std::vector<std::vector<std::uint32_t>>& dense_;
    std::size_t n_;
    std::size_t loaded_ = 0;
    std::vector<int> head_;
    std::vector<int> next_;
    std::vector<unsigned> counts_;
};

} // namespace

unsigned max_nontrivial(const FhsSet& set, const CorrelationOptions& options)
{
    const std::size_t count = set.size();
    const unsigned n = set.length();
    if (n == 1 && count == 1)
        throw Error(ErrorKind::DegenerateParameters, "a single sequence of length 1 has no nontrivial correlation");
    const double cost = correlation_cost(set);
    if (cost > options.budget)
        throw Error(ErrorKind::BudgetExceeded,
            "pairwise sweep needs " + std::to_string(cost) + " comparisons, budget is " + std::to_string(options.budget));

    // Symbols re-indexed densely so the occurrence table stays small.
    std::vector<Symbol> alphabet;
    for (const auto& s : set.sequences())
        alphabet.insert(alphabet.end(), s.symbols.begin(), s.symbols.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<std::vector<std::uint32_t>> dense;
    dense.reserve(count);
    for (const auto& s : set.sequences()) {
        std::vector<std::uint32_t> d(n);
        for (unsigned i = 0; i < n; ++i)
            d[i] = static_cast<std::uint32_t>(
                std::lower_bound(alphabet.begin(), alphabet.end(), s.symbols[i]) - alphabet.begin());
        dense.push_back(std::move(d));
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
    std::vector<unsigned> best(workers, 0);
    std::atomic<bool> done{false};
    parallel_slices(workers, workers, [&](std::uint64_t, std::uint64_t, unsigned w) {
        PeakScanner scanner(dense, alphabet.size());
        unsigned local = 0;
        // Strided rows balance the triangular workload.
        for (std::size_t a = w; a < count && !done.load(std::memory_order_relaxed); a += workers) {
            scanner.load(a);
            for (std::size_t b = (n >= 2 ? a : a + 1); b < count; ++b)
                local = std::max(local, scanner.peak(b));
            scanner.unload();
            if (options.proven_upper_bound && local >= *options.proven_upper_bound)
                done.store(true, std::memory_order_relaxed);
        }
        best[w] = local;
    });
    return *std::max_element(best.begin(), best.end());
}

SampledCorrelation sample_max_nontrivial(const FhsSet& set, std::uint64_t samples, std::uint64_t seed)
{
    const std::size_t count = set.size();
    const unsigned n = set.length();
    if (n == 1 && count == 1)
        throw Error(ErrorKind::DegenerateParameters, "a single sequence of length 1 has no nontrivial correlation");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    SampledCorrelation out;
    out.samples = samples;
    out.seed = seed;
    const auto& seqs = set.sequences();
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        if (a == b && n == 1) {
            while (b == a)
                b = pick(rng);
        }
        unsigned t;
        if (a == b)
            t = std::uniform_int_distribution<unsigned>(1, n - 1)(rng);
        else
            t = std::uniform_int_distribution<unsigned>(0, n - 1)(rng);
        out.lower_bound = std::max(out.lower_bound, correlation(seqs[a], seqs[b], t));
    }
    return out;
}

FhsSet classes_to_fhs(std::span<const EquivalenceClass> classes, const CyclicCode& code, OrbitSelection selection,
    Provenance provenance)
{
    const unsigned n = code.length();
    const std::uint64_t q = code.field()->order();
    if (selection == OrbitSelection::nonconstant) {
        if (n <= q)
            throw Error(ErrorKind::LengthAlphabetViolation,
                "constant-free orbit selection needs n > q (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
        if (!nonconstant_orbits_full(code))
            throw Error(ErrorKind::PredicateFailed, "some nonconstant codewords have short orbits");
    } else if (!nonzero_orbits_full(code)) {
        throw Error(ErrorKind::PredicateFailed, "some nonzero codewords have short orbits");
    }
    std::vector<FhsSequence> sequences;
    sequences.reserve(classes.size());
    for (const auto& c : classes) {
        if (c.size != n)
            throw Error(ErrorKind::ClassSizeNotFull, "equivalence class of size " + std::to_string(c.size));
        sequences.push_back({c.representative});
    }
    return FhsSet(q, std::move(sequences), std::move(provenance));
}

} // namespace fhsforge
