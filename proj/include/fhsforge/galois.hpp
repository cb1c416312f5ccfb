#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fhsforge {

// Elements of GF(p^m) are indexed by the base-p packing of their
// polynomial-basis coordinates: index = sum_j c_j p^j, where the element is
// sum_j c_j x^j modulo the field's modulus. Index 0 is zero, index 1 is one.
// The same packing is the canonical symbol order used everywhere else.
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/*
 * Table-driven GF(p^m).
 *
 * The modulus is the monic primitive polynomial of degree m over GF(p) whose
 * low coefficients c_0..c_{m-1}, read as base-p digits (c_0 least
 * significant), form the smallest integer. Because the modulus is primitive,
 * the class of x is a generator of the multiplicative group and serves as the
 * canonical primitive element.
 *
 * Instances are immutable and can be shared freely between threads.
 */
class FiniteField {
public:
    static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

    static FieldPtr make(unsigned p, unsigned m, std::uint64_t cap = kDefaultCap);
    /// GF(q) for a prime power q.
    static FieldPtr of_order(std::uint64_t q, std::uint64_t cap = kDefaultCap);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// c_0..c_m, low degree first, c_m = 1.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Elem primitive() const { return antilog(1); }

    /// Same (p, m) and modulus.
    bool same_as(const FiniteField& other) const;

    Elem add(Elem a, Elem b) const
    {
        if (p_ == 2)
            return a ^ b;
        if (!add_table_.empty())
            return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return antilog_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// k * 1, the image of the integer k in the prime subfield.
    Elem from_int(std::int64_t k) const;
    /// k * a for an integer k.
    Elem scale(Elem a, std::uint64_t k) const;
    /// Coordinate j of a in the polynomial basis.
    unsigned digit(Elem a, unsigned j) const { return (a / pow_p_[j]) % p_; }

    /// Discrete log base primitive(). Throws ZeroElement for 0.
    std::uint32_t log(Elem a) const;
    /// primitive()^i.
    Elem antilog(std::uint64_t i) const { return antilog_[i % (q_ - 1)]; }

    /// Multiplicative order of a nonzero element.
    std::uint32_t element_order(Elem a) const;
    /// primitive()^((q-1)/n), an element of order exactly n.
    Elem nth_root_of_unity(std::uint64_t n) const;

private:
    FiniteField() = default;
    Elem add_digits(Elem a, Elem b) const;

    unsigned p_ = 0;
    unsigned m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint32_t> pow_p_;
    std::vector<Elem> antilog_; // length 2(q-1) so that log a + log b needs no reduction
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;
};

/// Dense polynomial over a FiniteField, coefficients low degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field);
    Polynomial(FieldPtr field, std::vector<Elem> coeffs);

    static Polynomial constant(FieldPtr field, Elem c);
    /// c * x^degree
    static Polynomial monomial(FieldPtr field, Elem c, std::size_t degree);
    /// x^n - 1
    static Polynomial x_n_minus_1(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    /// Horner evaluation at a point of the same field.
    Elem eval(Elem x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// (quotient, remainder) with a = quotient * b + remainder, deg remainder < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// base^exponent mod modulus.
Polynomial pow_mod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus);

/*
 * Embedding of GF(p^m) into GF(p^M), m | M.
 *
 * The primitive element of the subfield is sent to gamma^s, where gamma is the
 * extension's primitive element raised to (Q-1)/(q-1) and s is the smallest
 * positive exponent for which gamma^s is a root of the subfield's modulus.
 * The whole table is then checked to be additive and multiplicative.
 */
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr sub, FieldPtr ext);

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& ext() const { return ext_; }

    Elem embed(Elem a) const { return forward_[a]; }
    /// Preimage of an extension element, or nullopt if it lies outside the subfield.
    std::optional<Elem> restrict(Elem a) const;
    /// Exponent e with embed(sub.primitive()) = ext.antilog(e).
    std::uint64_t primitive_exponent() const { return exponent_; }

private:
    FieldPtr sub_;
    FieldPtr ext_;
    std::uint64_t exponent_ = 0;
    std::vector<Elem> forward_;
    std::vector<std::int64_t> backward_;
};

} // namespace fhsforge
