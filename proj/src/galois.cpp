#include "fhsforge/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "fhsforge/error.hpp"
#include "fhsforge/numtheory.hpp"

namespace fhsforge {

namespace {

// Polynomials over the prime field GF(p) as plain coefficient vectors. Only
// used while the table-driven field does not exist yet (modulus search).
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p)
{
    // p is prime and small, Fermat is fine.
    std::uint64_t acc = 1, base = a % p;
    for (unsigned e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            acc = acc * base % p;
        base = base * base % p;
    }
    return static_cast<unsigned>(acc);
}

PrimePoly mod_prime_poly(PrimePoly a, const PrimePoly& b, unsigned p)
{
    trim(a);
    const unsigned lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const unsigned factor = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = static_cast<unsigned>((a[i + shift] + std::uint64_t{p - factor} * b[i]) % p);
        trim(a);
    }
    return a;
}

PrimePoly mulmod_prime_poly(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, unsigned p)
{
    if (a.empty() || b.empty())
        return {};
    PrimePoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<unsigned>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return mod_prime_poly(std::move(out), f, p);
}

PrimePoly gcd_prime_poly(PrimePoly a, PrimePoly b, unsigned p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = mod_prime_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= deg f / 2.
bool is_irreducible(const PrimePoly& f, unsigned p)
{
    const std::size_t m = f.size() - 1;
    PrimePoly x_power = mod_prime_poly({0, 1}, f, p);
    for (std::size_t i = 1; i <= m / 2; ++i) {
        PrimePoly acc{1};
        for (unsigned e = 0; e < p; ++e)
            acc = mulmod_prime_poly(acc, x_power, f, p);
        x_power = acc;
        PrimePoly diff = x_power;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty())
            return false;
        if (gcd_prime_poly(f, diff, p).size() != 1)
            return false;
    }
    return true;
}

} // namespace

FieldPtr FiniteField::make(unsigned p, unsigned m, std::uint64_t cap)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m == 0)
        throw Error(ErrorKind::PreconditionViolated, "field degree must be at least 1");
    const auto q = checked_pow(p, m);
    if (!q || *q > cap || *q > UINT32_MAX)
        throw Error(ErrorKind::FieldTooLarge,
            "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds the table cap " + std::to_string(cap));

    // Tables are immutable, so one instance per (p, m) serves every caller.
    static std::mutex cache_mutex;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({p, m}); it != cache.end())
        return it->second;

    auto field = std::shared_ptr<FiniteField>(new FiniteField());
    FiniteField& f = *field;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(*q);
    f.pow_p_.resize(m + 1);
    f.pow_p_[0] = 1;
    for (unsigned j = 1; j <= m; ++j)
        f.pow_p_[j] = f.pow_p_[j - 1] * p;

    const std::uint32_t order = f.q_ - 1;
    const std::uint32_t top_place = f.pow_p_[m - 1];

    // Multiplication by x in GF(p)[x]/(modulus), on packed indices.
    auto times_x = [&](Elem e, const std::vector<unsigned>& low) {
        const unsigned top = e / top_place;
        const Elem shifted = (e % top_place) * p;
        Elem out = 0;
        for (unsigned i = 0; i < m; ++i) {
            const unsigned d = (shifted / f.pow_p_[i]) % p;
            const unsigned r = static_cast<unsigned>((d + std::uint64_t{p} * p - std::uint64_t{top} * low[i]) % p);
            out += r * f.pow_p_[i];
        }
        return out;
    };

    std::vector<unsigned> low(m);
    bool found = false;
    for (std::uint32_t v = 0; v < f.q_ && !found; ++v) {
        for (unsigned i = 0; i < m; ++i)
            low[i] = (v / f.pow_p_[i]) % p;
        if (low[0] == 0)
            continue;
        // x must first return to 1 after exactly q-1 steps.
        Elem e = 1;
        std::uint32_t steps = 0;
        do {
            e = times_x(e, low);
            ++steps;
        } while (e != 1 && steps < order);
        if (e != 1 || steps != order)
            continue;
        PrimePoly candidate(low.begin(), low.end());
        candidate.push_back(1);
        if (!is_irreducible(candidate, p))
            continue;
        found = true;
    }
    if (!found)
        throw Error(ErrorKind::PreconditionViolated, "no primitive polynomial found");

    f.modulus_.assign(low.begin(), low.end());
    f.modulus_.push_back(1);

    f.antilog_.resize(2 * static_cast<std::size_t>(order));
    f.log_.assign(f.q_, 0);
    Elem e = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        f.antilog_[i] = e;
        f.antilog_[i + order] = e;
        f.log_[e] = i;
        e = times_x(e, low);
    }

    if (p != 2 && f.q_ <= 1024) {
        f.add_table_.resize(static_cast<std::size_t>(f.q_) * f.q_);
        for (Elem a = 0; a < f.q_; ++a)
            for (Elem b = 0; b < f.q_; ++b)
                f.add_table_[static_cast<std::size_t>(a) * f.q_ + b] = f.add_digits(a, b);
    }
    cache.emplace(std::make_pair(p, m), field);
    return field;
}

FieldPtr FiniteField::of_order(std::uint64_t q, std::uint64_t cap)
{
    const auto pm = prime_power(q);
    if (!pm)
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    return make(pm->first, pm->second, cap);
}

bool FiniteField::same_as(const FiniteField& other) const
{
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

Elem FiniteField::add_digits(Elem a, Elem b) const
{
    Elem out = 0;
    for (unsigned j = 0; j < m_; ++j)
        out += ((digit(a, j) + digit(b, j)) % p_) * pow_p_[j];
    return out;
}

Elem FiniteField::neg(Elem a) const
{
    if (p_ == 2)
        return a;
    Elem out = 0;
    for (unsigned j = 0; j < m_; ++j)
        out += ((p_ - digit(a, j)) % p_) * pow_p_[j];
    return out;
}

Elem FiniteField::inv(Elem a) const
{
    if (a == 0)
        throw Error(ErrorKind::ZeroElement, "zero has no inverse");
    const std::uint32_t order = q_ - 1;
    return antilog_[(order - log_[a]) % order];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const
{
    if (a == 0)
        return e == 0 ? 1 : 0;
    const std::uint64_t order = q_ - 1;
    const auto exp = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * (e % order)) % order);
    return antilog_[exp];
}

Elem FiniteField::from_int(std::int64_t k) const
{
    const std::int64_t r = ((k % p_) + p_) % p_;
    return static_cast<Elem>(r);
}

Elem FiniteField::scale(Elem a, std::uint64_t k) const
{
    const std::uint64_t factor = k % p_;
    Elem out = 0;
    for (unsigned j = 0; j < m_; ++j)
        out += static_cast<Elem>((digit(a, j) * factor) % p_) * pow_p_[j];
    return out;
}

std::uint32_t FiniteField::log(Elem a) const
{
    if (a == 0)
        throw Error(ErrorKind::ZeroElement, "zero has no discrete logarithm");
    return log_[a];
}

std::uint32_t FiniteField::element_order(Elem a) const
{
    if (a == 0)
        throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
    const std::uint32_t order = q_ - 1;
    return order / std::gcd(log_[a], order);
}

Elem FiniteField::nth_root_of_unity(std::uint64_t n) const
{
    const std::uint32_t order = q_ - 1;
    if (n == 0 || order % n != 0)
        throw Error(ErrorKind::OrderDoesNotDivide,
            std::to_string(n) + " does not divide " + std::to_string(order));
    return antilog(order / n);
}

// ---------------------------------------------------------------------------

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b)
{
    if (!a.field()->same_as(*b.field()))
        throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
}

} // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(FieldPtr field, Elem c)
{
    return Polynomial(std::move(field), std::vector<Elem>{c});
}

Polynomial Polynomial::monomial(FieldPtr field, Elem c, std::size_t degree)
{
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::x_n_minus_1(FieldPtr field, std::size_t n)
{
    std::vector<Elem> coeffs(n + 1, 0);
    coeffs[n] = 1;
    coeffs[0] = field->neg(1);
    return Polynomial(std::move(field), std::move(coeffs));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Elem Polynomial::eval(Elem x) const
{
    const FiniteField& f = *field_;
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return Polynomial(field_);
    std::vector<Elem> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = field_->scale(coeffs_[i], i);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    const Elem scale = field_->inv(leading());
    std::vector<Elem> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = field_->mul(coeffs_[i], scale);
    return Polynomial(field_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    const FiniteField& f = *a.field_;
    std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    const FiniteField& f = *a.field_;
    std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.field_);
    const FiniteField& f = *a.field_;
    std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator/(const Polynomial& a, const Polynomial& b)
{
    return divmod(a, b).first;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b)
{
    return divmod(a, b).second;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
    const FiniteField& f = *a.field();
    if (a.degree() < b.degree())
        return {Polynomial(a.field()), a};

    std::vector<Elem> rem = a.coefficients();
    const auto& div = b.coefficients();
    std::vector<Elem> quot(rem.size() - div.size() + 1, 0);
    const Elem lead_inv = f.inv(b.leading());
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const Elem top = rem[shift + div.size() - 1];
        if (top == 0)
            continue;
        const Elem factor = f.mul(top, lead_inv);
        quot[shift] = factor;
        for (std::size_t i = 0; i < div.size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, div[i]));
    }
    rem.resize(div.size() - 1);
    return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus)
{
    Polynomial acc = Polynomial::constant(base.field(), 1) % modulus;
    Polynomial b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1)
            acc = (acc * b) % modulus;
        b = (b * b) % modulus;
        exponent >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(FieldPtr sub, FieldPtr ext) : sub_(std::move(sub)), ext_(std::move(ext))
{
    const FiniteField& s = *sub_;
    const FiniteField& e = *ext_;
    if (s.characteristic() != e.characteristic() || e.degree() % s.degree() != 0)
        throw Error(ErrorKind::FieldMismatch, "subfield degree must divide extension degree in the same characteristic");

    const std::uint64_t small_order = s.order() - 1;
    const std::uint64_t step = (std::uint64_t{e.order()} - 1) / small_order;

    std::vector<Elem> modulus_in_ext;
    for (unsigned c : s.modulus())
        modulus_in_ext.push_back(e.from_int(c));
    const auto eval_modulus = [&](Elem x) {
        Elem acc = 0;
        for (auto it = modulus_in_ext.rbegin(); it != modulus_in_ext.rend(); ++it)
            acc = e.add(e.mul(acc, x), *it);
        return acc;
    };

    for (std::uint64_t k = 1; k <= small_order; ++k) {
        if (std::gcd(k, small_order) != 1)
            continue;
        const Elem image = e.antilog(step * k);
        if (eval_modulus(image) != 0)
            continue;

        std::vector<Elem> forward(s.order(), 0);
        std::vector<Elem> basis(s.degree());
        Elem power = 1;
        for (unsigned j = 0; j < s.degree(); ++j) {
            basis[j] = power;
            power = e.mul(power, image);
        }
        for (Elem a = 0; a < s.order(); ++a) {
            Elem acc = 0;
            for (unsigned j = 0; j < s.degree(); ++j)
                acc = e.add(acc, e.scale(basis[j], s.digit(a, j)));
            forward[a] = acc;
        }
        bool ok = true;
        for (std::uint64_t i = 0; i < small_order && ok; ++i)
            ok = forward[s.antilog(i)] == e.antilog(step * k * i);
        if (!ok)
            continue;

        exponent_ = (step * k) % (e.order() - 1);
        forward_ = std::move(forward);
        backward_.assign(e.order(), -1);
        for (Elem a = 0; a < s.order(); ++a)
            backward_[forward_[a]] = a;
        return;
    }
    throw Error(ErrorKind::FieldMismatch, "no embedding found");
}

std::optional<Elem> FieldEmbedding::restrict(Elem a) const
{
    if (a >= backward_.size() || backward_[a] < 0)
        return std::nullopt;
    return static_cast<Elem>(backward_[a]);
}

} // namespace fhsforge
