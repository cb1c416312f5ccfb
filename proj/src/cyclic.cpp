#include "fhsforge/cyclic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fhsforge/error.hpp"
#include "fhsforge/numtheory.hpp"
#include "fhsforge/parallel.hpp"
#include "fhsforge/rotation.hpp"

namespace fhsforge {

using boost::multiprecision::cpp_int;

std::vector<CyclotomicCoset> cyclotomic_cosets(unsigned n, std::uint64_t q)
{
    if (n == 0 || std::gcd(std::uint64_t{n}, q) != 1)
        throw Error(ErrorKind::NotCoprime,
            "cyclotomic cosets need gcd(n, q) = 1 (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
    const std::uint64_t step = q % n;
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (unsigned t = 0; t < n; ++t) {
        if (seen[t])
            continue;
        CyclotomicCoset coset{n, q, t, {}};
        std::uint64_t x = t;
        do {
            seen[x] = true;
            coset.members.push_back(static_cast<unsigned>(x));
            x = x * step % n;
        } while (x != t);
        std::sort(coset.members.begin(), coset.members.end());
        out.push_back(std::move(coset));
    }
    return out;
}

// ---------------------------------------------------------------------------

struct RootsOfUnity::Impl {
    unsigned n = 0;
    FieldPtr base;
    unsigned degree = 1;

    // Table backend.
    FieldPtr ext;
    std::optional<FieldEmbedding> embedding;
    Elem alpha = 0;

    // Polynomial-ring backend: GF(q)[y]/(modulus).
    std::optional<Polynomial> modulus;
    std::optional<Polynomial> ring_alpha;

    Polynomial ring_mul(const Polynomial& a, const Polynomial& b) const { return (a * b) % *modulus; }

    Polynomial ring_pow(const Polynomial& a, const cpp_int& e) const
    {
        Polynomial acc = Polynomial::constant(base, 1);
        if (e == 0)
            return acc;
        for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
            acc = ring_mul(acc, acc);
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
                acc = ring_mul(acc, a);
        }
        return acc;
    }

    bool ring_is_one(const Polynomial& a) const { return a.degree() == 0 && a.coeff(0) == 1; }

    void init_ring()
    {
        const std::uint64_t q = base->order();
        const Polynomial x = Polynomial::monomial(base, 1, 1);

        // Smallest monic irreducible of degree `degree` (Rabin's test).
        for (std::uint64_t v = 0;; ++v) {
            std::vector<Elem> coeffs(degree + 1, 0);
            std::uint64_t rest = v;
            for (unsigned i = 0; i < degree; ++i) {
                coeffs[i] = static_cast<Elem>(rest % q);
                rest /= q;
            }
            coeffs[degree] = 1;
            Polynomial f(base, std::move(coeffs));
            std::vector<Polynomial> frob{x % f};
            for (unsigned i = 1; i <= degree; ++i)
                frob.push_back(pow_mod(frob.back(), q, f));
            if (!(frob[degree] == frob[0]))
                continue;
            bool irreducible = true;
            for (std::uint64_t r : prime_factors(degree)) {
                if (gcd(frob[degree / r] - x, f).degree() != 0) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) {
                modulus = std::move(f);
                break;
            }
        }

        cpp_int order = 1;
        for (unsigned i = 0; i < degree; ++i)
            order *= q;
        order -= 1;
        const cpp_int cofactor = order / n;
        const auto primes = prime_factors(n);

        for (std::uint64_t t = q;; ++t) {
            std::vector<Elem> coeffs;
            for (std::uint64_t rest = t; rest > 0; rest /= q)
                coeffs.push_back(static_cast<Elem>(rest % q));
            const Polynomial z = Polynomial(base, std::move(coeffs)) % *modulus;
            if (z.is_zero())
                continue;
            Polynomial w = ring_pow(z, cofactor);
            bool full = true;
            for (std::uint64_t r : primes)
                if (ring_is_one(ring_pow(w, cpp_int(n / r))))
                    full = false;
            if (full) {
                ring_alpha = std::move(w);
                break;
            }
        }
    }
};

RootsOfUnity::RootsOfUnity(unsigned n, FieldPtr base)
{
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->base = base;
    impl->degree = multiplicative_order(base->order(), n);

    const auto ext_order = checked_pow(base->characteristic(), base->degree() * impl->degree);
    if (ext_order && *ext_order <= FiniteField::kDefaultCap) {
        impl->ext = FiniteField::make(base->characteristic(), base->degree() * impl->degree);
        impl->embedding.emplace(base, impl->ext);
        impl->alpha = impl->ext->nth_root_of_unity(n);
    } else {
        impl->init_ring();
    }
    impl_ = std::move(impl);
}

unsigned RootsOfUnity::length() const { return impl_->n; }
const FieldPtr& RootsOfUnity::base() const { return impl_->base; }
unsigned RootsOfUnity::extension_degree() const { return impl_->degree; }
bool RootsOfUnity::table_backed() const { return impl_->ext != nullptr; }
FieldPtr RootsOfUnity::extension_field() const { return impl_->ext; }

std::vector<std::uint32_t> RootsOfUnity::extension_modulus() const
{
    if (impl_->ext)
        return {impl_->ext->modulus().begin(), impl_->ext->modulus().end()};
    return impl_->modulus->coefficients();
}

std::vector<Elem> RootsOfUnity::alpha() const
{
    if (impl_->ext)
        return {impl_->alpha};
    std::vector<Elem> coords = impl_->ring_alpha->coefficients();
    coords.resize(impl_->degree, 0);
    return coords;
}

Polynomial RootsOfUnity::product_of_linear_factors(std::span<const unsigned> exponents) const
{
    const Impl& m = *impl_;
    std::vector<Elem> out;
    if (m.ext) {
        const FiniteField& e = *m.ext;
        std::vector<Elem> acc{1};
        for (unsigned j : exponents) {
            const Elem root = e.neg(e.pow(m.alpha, j));
            acc.push_back(0);
            for (std::size_t i = acc.size() - 1; i > 0; --i)
                acc[i] = e.add(acc[i - 1], e.mul(root, acc[i]));
            acc[0] = e.mul(root, acc[0]);
        }
        for (Elem c : acc) {
            const auto back = m.embedding->restrict(c);
            if (!back)
                throw Error(ErrorKind::NotInSubfield, "coefficient outside the base field");
            out.push_back(*back);
        }
    } else {
        std::vector<Polynomial> acc{Polynomial::constant(m.base, 1)};
        for (unsigned j : exponents) {
            const Polynomial root =
                Polynomial(m.base) - m.ring_pow(*m.ring_alpha, cpp_int(j));
            acc.push_back(Polynomial(m.base));
            for (std::size_t i = acc.size() - 1; i > 0; --i)
                acc[i] = acc[i - 1] + m.ring_mul(root, acc[i]);
            acc[0] = m.ring_mul(root, acc[0]);
        }
        for (const Polynomial& c : acc) {
            if (c.degree() > 0)
                throw Error(ErrorKind::NotInSubfield, "coefficient outside the base field");
            out.push_back(c.coeff(0));
        }
    }
    return Polynomial(m.base, std::move(out));
}

bool RootsOfUnity::is_root(const Polynomial& poly, unsigned j) const
{
    const Impl& m = *impl_;
    if (!poly.field()->same_as(*m.base))
        throw Error(ErrorKind::FieldMismatch, "polynomial is not over the base field");
    const auto& coeffs = poly.coefficients();
    if (m.ext) {
        const FiniteField& e = *m.ext;
        const Elem point = e.pow(m.alpha, j);
        Elem acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = e.add(e.mul(acc, point), m.embedding->embed(*it));
        return acc == 0;
    }
    const Polynomial point = m.ring_pow(*m.ring_alpha, cpp_int(j));
    Polynomial acc(m.base);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = m.ring_mul(acc, point) + Polynomial::constant(m.base, *it);
    return acc.is_zero();
}

CosetFactorization factor_x_n_minus_1(unsigned n, FieldPtr field)
{
    CosetFactorization out;
    out.n = n;
    out.field = field;
    out.cosets = cyclotomic_cosets(n, field->order());
    out.roots = std::make_shared<RootsOfUnity>(n, field);
    out.coset_of.assign(n, 0);
    for (std::size_t i = 0; i < out.cosets.size(); ++i) {
        for (unsigned j : out.cosets[i].members)
            out.coset_of[j] = i;
        out.factors.push_back(out.roots->product_of_linear_factors(out.cosets[i].members));
    }
    return out;
}

// ---------------------------------------------------------------------------

CyclicCode::CyclicCode(unsigned n, FieldPtr field, std::shared_ptr<const RootsOfUnity> roots,
    std::vector<unsigned> z, Polynomial g, Polynomial h)
    : n_(n), field_(std::move(field)), roots_(std::move(roots)), defining_set_(std::move(z)),
      generator_(std::move(g)), parity_check_(std::move(h))
{
}

bool CyclicCode::contains_constants() const
{
    return !std::binary_search(defining_set_.begin(), defining_set_.end(), 0u);
}

CyclicCode build_code(const CosetFactorization& factorization, std::span<const unsigned> defining_set)
{
    const unsigned n = factorization.n;
    std::vector<unsigned> z(defining_set.begin(), defining_set.end());
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    if (!z.empty() && z.back() >= n)
        throw Error(ErrorKind::NotCosetClosed, "defining set entry out of range");

    std::vector<bool> in_z(n, false);
    for (unsigned j : z)
        in_z[j] = true;
    std::vector<bool> used(factorization.cosets.size(), false);
    Polynomial g = Polynomial::constant(factorization.field, 1);
    for (unsigned j : z) {
        const std::size_t c = factorization.coset_of[j];
        if (used[c])
            continue;
        for (unsigned member : factorization.cosets[c].members)
            if (!in_z[member])
                throw Error(ErrorKind::NotCosetClosed,
                    "defining set contains " + std::to_string(j) + " but not " + std::to_string(member));
        used[c] = true;
        g = g * factorization.factors[c];
    }
    auto [h, rem] = divmod(Polynomial::x_n_minus_1(factorization.field, n), g);
    if (!rem.is_zero())
        throw Error(ErrorKind::NotInSubfield, "generator does not divide x^n - 1");
    return CyclicCode(n, factorization.field, factorization.roots, std::move(z), std::move(g), std::move(h));
}

CyclicCode build_code(unsigned n, FieldPtr field, std::span<const unsigned> defining_set)
{
    return build_code(factor_x_n_minus_1(n, std::move(field)), defining_set);
}

bool nonconstant_orbits_full(const CyclicCode& code)
{
    if (!code.contains_constants())
        throw Error(ErrorKind::DoesNotContainAllOnes, "0 is in the defining set");
    const unsigned n = code.length();
    const auto& z = code.defining_set();
    for (unsigned j = 1; j < n; ++j)
        if (!std::binary_search(z.begin(), z.end(), j) && std::gcd(j, n) != 1)
            return false;
    return true;
}

bool nonzero_orbits_full(const CyclicCode& code)
{
    const unsigned n = code.length();
    const auto& z = code.defining_set();
    if (z.size() == n)
        throw Error(ErrorKind::ZeroCode, "the zero code has no nonzero codewords");
    for (unsigned j = 0; j < n; ++j)
        if (!std::binary_search(z.begin(), z.end(), j) && std::gcd(j, n) != 1)
            return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

/*
 * Walks the codewords as GF(p)-linear combinations of the vectors
 * b_j * x^i g(x), i < k, j < m, where b_j is the field element with index p^j.
 * A base-p counter over those k*m coordinates visits every codeword once;
 * bumping coordinate d (including the wrap p-1 -> 0) always adds basis vector
 * d, so each step costs p/(p-1) vector additions on average.
 */
class CodewordWalker {
public:
    CodewordWalker(const CyclicCode& code) : field_(*code.field()), n_(code.length())
    {
        const unsigned k = code.dimension();
        const unsigned p = field_.characteristic();
        const auto& g = code.generator().coefficients();
        Elem place = 1;
        std::vector<Elem> places;
        for (unsigned j = 0; j < field_.degree(); ++j, place *= p)
            places.push_back(place);
        for (unsigned i = 0; i < k; ++i) {
            for (Elem b : places) {
                std::vector<Elem> v(n_, 0);
                for (std::size_t t = 0; t < g.size(); ++t)
                    v[i + t] = field_.mul(b, g[t]);
                basis_.push_back(std::move(v));
            }
        }
    }

    template <typename Visit>
    void run(std::uint64_t begin, std::uint64_t end, Visit&& visit) const
    {
        const unsigned p = field_.characteristic();
        const std::size_t dims = basis_.size();
        std::vector<unsigned> digits(dims, 0);
        std::vector<Elem> word(n_, 0);
        std::uint64_t rest = begin;
        for (std::size_t d = 0; d < dims; ++d) {
            digits[d] = static_cast<unsigned>(rest % p);
            rest /= p;
            for (unsigned t = 0; t < digits[d]; ++t)
                add(word, basis_[d]);
        }
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            visit(std::span<const Elem>(word));
            for (std::size_t d = 0; d < dims; ++d) {
                add(word, basis_[d]);
                if (++digits[d] < p)
                    break;
                digits[d] = 0;
            }
        }
    }

private:
    void add(std::vector<Elem>& word, const std::vector<Elem>& v) const
    {
        if (field_.characteristic() == 2) {
            for (std::size_t i = 0; i < n_; ++i)
                word[i] ^= v[i];
        } else {
            for (std::size_t i = 0; i < n_; ++i)
                word[i] = field_.add(word[i], v[i]);
        }
    }

    const FiniteField& field_;
    std::size_t n_;
    std::vector<std::vector<Elem>> basis_;
};

bool selected(std::span<const Elem> word, Exclude exclude)
{
    switch (exclude) {
    case Exclude::none:
        return true;
    case Exclude::zero_word:
        return std::any_of(word.begin(), word.end(), [](Elem e) { return e != 0; });
    case Exclude::constants:
        return std::any_of(word.begin(), word.end(), [&](Elem e) { return e != word[0]; });
    }
    return true;
}

} // namespace

std::uint64_t codeword_count(const CyclicCode& code, std::uint64_t cap)
{
    const auto count = checked_pow(code.field()->order(), code.dimension());
    if (!count || *count > cap)
        throw Error(ErrorKind::EnumerationTooLarge,
            std::to_string(code.field()->order()) + "^" + std::to_string(code.dimension()) +
                " codewords exceed the enumeration cap " + std::to_string(cap));
    return *count;
}

void for_each_codeword(const CyclicCode& code, std::uint64_t cap, const std::function<void(std::span<const Elem>)>& visit)
{
    const std::uint64_t total = codeword_count(code, cap);
    CodewordWalker(code).run(0, total, visit);
}

std::vector<EquivalenceClass> enumerate_classes(const CyclicCode& code, Exclude exclude, const EnumerationOptions& options)
{
    const std::uint64_t total = codeword_count(code, options.cap);
    const CodewordWalker walker(code);
    std::vector<std::vector<EquivalenceClass>> partial(std::max(1u, options.threads));
    parallel_slices(total, options.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        auto& out = partial[worker];
        walker.run(begin, end, [&](std::span<const Elem> word) {
            if (!selected(word, exclude) || least_rotation(word) != 0)
                return;
            out.push_back({std::vector<Elem>(word.begin(), word.end()), static_cast<unsigned>(rotation_period(word))});
        });
    });
    std::vector<EquivalenceClass> classes;
    for (auto& part : partial)
        classes.insert(classes.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    std::sort(classes.begin(), classes.end(),
        [](const EquivalenceClass& a, const EquivalenceClass& b) { return a.representative < b.representative; });
    return classes;
}

unsigned min_distance_exhaustive(const CyclicCode& code, const EnumerationOptions& options)
{
    if (code.dimension() == 0)
        throw Error(ErrorKind::ZeroCode, "the zero code has no nonzero codewords");
    const std::uint64_t total = codeword_count(code, options.cap);
    const CodewordWalker walker(code);
    std::vector<unsigned> best(std::max(1u, options.threads), std::numeric_limits<unsigned>::max());
    parallel_slices(total, options.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        unsigned local = best[worker];
        walker.run(begin, end, [&](std::span<const Elem> word) {
            const auto weight = static_cast<unsigned>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }));
            if (weight != 0 && weight < local)
                local = weight;
        });
        best[worker] = local;
    });
    return *std::min_element(best.begin(), best.end());
}

CyclicCode ding_code(std::uint64_t q, unsigned m)
{
    FieldPtr field = FiniteField::of_order(q);
    if (m == 0 || std::gcd(std::uint64_t{m}, q - 1) != 1)
        throw Error(ErrorKind::GcdCondition, "ding code needs gcd(m, q-1) = 1");
    const auto qm = checked_pow(q, m);
    if (!qm || (*qm - 1) / (q - 1) > std::numeric_limits<unsigned>::max())
        throw Error(ErrorKind::PreconditionViolated, "code length too large");
    const auto n = static_cast<unsigned>((*qm - 1) / (q - 1));
    CosetFactorization factorization = factor_x_n_minus_1(n, field);
    const auto& c1 = factorization.cosets[factorization.coset_of[1 % n]].members;
    return build_code(factorization, c1);
}

} // namespace fhsforge
