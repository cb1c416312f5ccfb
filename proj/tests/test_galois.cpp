#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fhsforge/error.hpp"
#include "fhsforge/galois.hpp"
#include "fhsforge/numtheory.hpp"

using namespace fhsforge;

namespace {

// Schoolbook product of packed elements modulo the field modulus, written
// independently of the log tables.
Elem slow_mul(const FiniteField& f, Elem a, Elem b)
{
    const unsigned p = f.characteristic(), m = f.degree();
    std::vector<unsigned> x(m), y(m), prod(2 * m, 0);
    for (unsigned j = 0; j < m; ++j) {
        x[j] = f.digit(a, j);
        y[j] = f.digit(b, j);
    }
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    const auto& mod = f.modulus();
    for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d) {
        const unsigned c = prod[d];
        if (c == 0)
            continue;
        for (unsigned j = 0; j <= m; ++j)
            prod[d - m + j] = (prod[d - m + j] + (p - c) * mod[j]) % p;
    }
    Elem out = 0, scale = 1;
    for (unsigned j = 0; j < m; ++j) {
        out += prod[j] * scale;
        scale *= p;
    }
    return out;
}

const std::vector<std::uint64_t> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

} // namespace

TEST_CASE("field axioms and table arithmetic for small fields")
{
    for (auto q : kSmallOrders) {
        CAPTURE(q);
        const auto f = FiniteField::of_order(q);
        REQUIRE(f->order() == q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0)
                CHECK(f->mul(a, f->inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == slow_mul(*f, a, b));
            }
        }
        // Spot-check associativity and distributivity.
        std::mt19937 rng(1234);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
        for (int t = 0; t < 500; ++t) {
            const Elem a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
            CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
    }
}

TEST_CASE("log and antilog are inverse, primitive element has full order")
{
    for (auto q : kSmallOrders) {
        CAPTURE(q);
        const auto f = FiniteField::of_order(q);
        CHECK(f->element_order(f->primitive()) == q - 1);
        for (Elem a = 1; a < q; ++a)
            CHECK(f->antilog(f->log(a)) == a);
        CHECK_THROWS_AS(f->log(0), Error);
    }
}

TEST_CASE("canonical moduli")
{
    // x^3 + x + 1 is the smallest primitive cubic over GF(2).
    CHECK(FiniteField::make(2, 3)->modulus() == std::vector<unsigned>{1, 1, 0, 1});
    // x^4 + x + 1.
    CHECK(FiniteField::make(2, 4)->modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
    // x^2 + x + 2 over GF(5): x^2 + 2 and x^2 + x + 1 etc. are not primitive.
    const auto f25 = FiniteField::make(5, 2);
    CHECK(f25->modulus().size() == 3);
    CHECK(f25->element_order(f25->primitive()) == 24);
    // GF(512) and GF(2^18) are within the default table cap.
    CHECK(FiniteField::make(2, 9)->order() == 512);
    CHECK(FiniteField::make(2, 18)->order() == 262144);
    CHECK_THROWS_AS(FiniteField::make(2, 21), Error);
    CHECK_THROWS_AS(FiniteField::make(4, 2), Error);
    CHECK_THROWS_AS(FiniteField::of_order(12), Error);
}

TEST_CASE("element orders and roots of unity")
{
    const auto f64 = FiniteField::make(2, 6);
    const Elem w = f64->nth_root_of_unity(9);
    CHECK(f64->element_order(w) == 9);
    CHECK(f64->pow(w, 9) == 1);
    CHECK_THROWS_AS(f64->nth_root_of_unity(5), Error);
    // Every nonzero element's order divides q - 1.
    for (Elem a = 1; a < 64; ++a)
        CHECK(63 % f64->element_order(a) == 0);
}

TEST_CASE("polynomial arithmetic")
{
    const auto f = FiniteField::make(3, 2);
    std::mt19937 rng(99);
    std::uniform_int_distribution<Elem> pick(0, 8);
    auto random_poly = [&](int deg) {
        std::vector<Elem> c(deg + 1);
        for (auto& v : c)
            v = pick(rng);
        c.back() = 1 + pick(rng) % 8;
        return Polynomial(f, c);
    };
    for (int t = 0; t < 200; ++t) {
        const auto a = random_poly(static_cast<int>(rng() % 8));
        const auto b = random_poly(static_cast<int>(rng() % 5));
        const auto [quo, rem] = divmod(a, b);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree() < b.degree());
        const auto g = gcd(a, b);
        CHECK(g.is_monic());
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK(a - a == Polynomial(f));
        const Elem x = pick(rng);
        CHECK((a * b).eval(x) == f->mul(a.eval(x), b.eval(x)));
        CHECK((a + b).eval(x) == f->add(a.eval(x), b.eval(x)));
    }
    CHECK_THROWS_AS(divmod(random_poly(3), Polynomial(f)), Error);

    const auto xn = Polynomial::x_n_minus_1(f, 8);
    CHECK(xn.degree() == 8);
    for (Elem a = 1; a < 9; ++a)
        CHECK(xn.eval(a) == 0);
    const auto x = Polynomial::monomial(f, 1, 1);
    CHECK(pow_mod(x, 8, xn) == Polynomial::constant(f, 1));
}

TEST_CASE("subfield embedding")
{
    const auto sub = FiniteField::make(2, 3);
    const auto ext = FiniteField::make(2, 6);
    const FieldEmbedding e(sub, ext);
    for (Elem a = 0; a < 8; ++a) {
        CHECK(e.restrict(e.embed(a)) == a);
        for (Elem b = 0; b < 8; ++b) {
            CHECK(e.embed(sub->mul(a, b)) == ext->mul(e.embed(a), e.embed(b)));
            CHECK(e.embed(sub->add(a, b)) == ext->add(e.embed(a), e.embed(b)));
        }
    }
    unsigned inside = 0;
    for (Elem a = 0; a < 64; ++a)
        inside += e.restrict(a).has_value();
    CHECK(inside == 8);

    const FieldEmbedding e25(FiniteField::make(5, 1), FiniteField::make(5, 2));
    for (Elem a = 0; a < 5; ++a)
        CHECK(e25.embed(a) == a);
    CHECK_THROWS_AS(FieldEmbedding(FiniteField::make(2, 2), FiniteField::make(2, 3)), Error);
}
