#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fhsforge/galois.hpp"

namespace fhsforge {

struct CyclotomicCoset {
    unsigned n = 0;
    std::uint64_t q = 0;
    unsigned representative = 0;  // min(members)
    std::vector<unsigned> members; // ascending

    std::size_t size() const { return members.size(); }
    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// All q-cyclotomic cosets modulo n, ordered by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(unsigned n, std::uint64_t q);

/*
 * The n-th roots of unity over GF(q), realised in GF(q^e) where e is the
 * multiplicative order of q mod n; alpha is a fixed primitive n-th root.
 *
 * When p^{me} fits the table cap the extension is the table-driven
 * GF(p^{me}) with alpha = beta^{(q^e-1)/n} for its canonical primitive element
 * beta, and GF(q) sits inside it through FieldEmbedding. Otherwise the
 * extension is GF(q)[y]/(f) for the smallest monic irreducible f of degree e
 * (base-q packing of its low coefficients), and alpha is the first element
 * z^((q^e-1)/n), z running over y, y+1, ... in packed order, of order n.
 */
class RootsOfUnity {
public:
    RootsOfUnity(unsigned n, FieldPtr base);

    unsigned length() const;
    const FieldPtr& base() const;
    unsigned extension_degree() const;
    bool table_backed() const;
    /// The table field hosting alpha, or null for the polynomial-ring backend.
    FieldPtr extension_field() const;
    /// Table backend: GF(p) modulus of the extension. Ring backend: GF(q)
    /// coefficients of f. Low degree first in both cases.
    std::vector<std::uint32_t> extension_modulus() const;
    /// Table backend: {index of alpha}. Ring backend: coordinates of alpha in 1, y, .., y^{e-1}.
    std::vector<Elem> alpha() const;

    /// prod_{j in exponents} (x - alpha^j), with coefficients pulled back into
    /// GF(q). Throws NotInSubfield if any coefficient lies outside GF(q).
    Polynomial product_of_linear_factors(std::span<const unsigned> exponents) const;
    /// poly(alpha^j) == 0 for poly over the base field.
    bool is_root(const Polynomial& poly, unsigned j) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// x^n - 1 = prod over cosets C of M_C(x), M_C(x) = prod_{j in C} (x - alpha^j).
struct CosetFactorization {
    unsigned n = 0;
    FieldPtr field;
    std::shared_ptr<const RootsOfUnity> roots;
    std::vector<CyclotomicCoset> cosets;
    std::vector<Polynomial> factors; // factors[i] belongs to cosets[i]
    std::vector<std::size_t> coset_of; // residue -> index into cosets
};

CosetFactorization factor_x_n_minus_1(unsigned n, FieldPtr field);

class CyclicCode {
public:
    unsigned length() const { return n_; }
    unsigned dimension() const { return n_ - static_cast<unsigned>(defining_set_.size()); }
    const FieldPtr& field() const { return field_; }
    const std::vector<unsigned>& defining_set() const { return defining_set_; }
    const Polynomial& generator() const { return generator_; }
    const Polynomial& parity_check() const { return parity_check_; }
    const RootsOfUnity& roots() const { return *roots_; }
    /// h(1) = 0, i.e. the constant words are codewords.
    bool contains_constants() const;

private:
    friend CyclicCode build_code(const CosetFactorization&, std::span<const unsigned>);

    CyclicCode(unsigned n, FieldPtr field, std::shared_ptr<const RootsOfUnity> roots, std::vector<unsigned> z,
        Polynomial g, Polynomial h);

    unsigned n_;
    FieldPtr field_;
    std::shared_ptr<const RootsOfUnity> roots_;
    std::vector<unsigned> defining_set_;
    Polynomial generator_;
    Polynomial parity_check_;
};

/// Code with defining set Z (a union of cosets). Z may be given in any order.
CyclicCode build_code(const CosetFactorization& factorization, std::span<const unsigned> defining_set);
CyclicCode build_code(unsigned n, FieldPtr field, std::span<const unsigned> defining_set);

/// Every codeword outside the constant subcode has a full shift orbit.
/// Decided arithmetically: every j in {1..n-1} \ Z must be coprime to n.
/// Requires 0 not in Z (DoesNotContainAllOnes otherwise).
bool nonconstant_orbits_full(const CyclicCode& code);

/// Every nonzero codeword has a full shift orbit: every j outside Z is coprime
/// to n. Throws ZeroCode for the zero code.
bool nonzero_orbits_full(const CyclicCode& code);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

struct EnumerationOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

/// q^k, or EnumerationTooLarge if it exceeds the cap.
std::uint64_t codeword_count(const CyclicCode& code, std::uint64_t cap);

/// Visits every codeword exactly once (order unspecified). Single-threaded.
void for_each_codeword(const CyclicCode& code, std::uint64_t cap,
    const std::function<void(std::span<const Elem>)>& visit);

struct EquivalenceClass {
    std::vector<Elem> representative; // least rotation
    unsigned size = 0;                // orbit size = period, divides n

    friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

enum class Exclude { none, zero_word, constants };

/// Shift orbits of the selected codewords, sorted by representative.
std::vector<EquivalenceClass> enumerate_classes(
    const CyclicCode& code, Exclude exclude, const EnumerationOptions& options = {});

/// Minimum Hamming weight of a nonzero codeword, by enumeration.
unsigned min_distance_exhaustive(const CyclicCode& code, const EnumerationOptions& options = {});

/// The [n, n-m, 3] code with n = (q^m-1)/(q-1) and defining set C_1.
/// Requires gcd(m, q-1) = 1.
CyclicCode ding_code(std::uint64_t q, unsigned m);

} // namespace fhsforge
