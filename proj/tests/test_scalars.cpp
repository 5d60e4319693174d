#include <doctest.h>

#include <numeric>
#include <random>

#include "qk1/cyclotomic.hpp"

using namespace qk1;

namespace
{

Cyc z(long k, int n = 12) { return Cyc::root_of_unity(k, n); }

Cyc random_cyc(std::mt19937_64 &rng, int n)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i < euler_phi(n); ++i) {
        c.emplace_back(num(rng), den(rng));
    }
    return Cyc(n, c);
}

} // namespace

TEST_CASE("rational canonical form")
{
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(6, 2) == Rational(15));
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == Poly<Rational>(std::vector<Rational>{-1, 1}));
    CHECK(cyclotomic_polynomial(4) == Poly<Rational>(std::vector<Rational>{1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == Poly<Rational>(std::vector<Rational>{1, 0, -1, 0, 1}));
    for (int n = 1; n <= 30; ++n) {
        CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
    }
}

TEST_CASE("field operations")
{
    const Cyc i = z(1, 4);
    CHECK(i.inverse() == -i);
    CHECK(i.inverse() == z(3, 4));
    const Cyc a = Cyc(1) + i;
    const Cyc inv = a.inverse();
    CHECK(inv == (Cyc(1) - i) / Cyc(2));
    CHECK(inv * a == Cyc(1));
    CHECK(z(2) * z(2) * z(2) == Cyc(-1));
    CHECK_THROWS_AS(Cyc().inverse(), DivisionByZero);
}

TEST_CASE("roots of unity")
{
    CHECK(z(0) == Cyc(1));
    CHECK(z(6) == Cyc(-1));
    const Cyc w = z(2);
    CHECK((w * w - w + Cyc(1)).is_zero());
    CHECK(z(12) == Cyc(1));
    CHECK(z(-1) * z(1) == Cyc(1));
    for (int n = 1; n <= 12; ++n) {
        Cyc p = Cyc::root_of_unity(1, n);
        Cyc acc(1);
        for (int k = 0; k < n; ++k) {
            acc *= p;
        }
        CHECK(acc == Cyc(1));
        Cyc phi_at(0);
        const auto &phi = cyclotomic_polynomial(n);
        for (int k = phi.degree(); k >= 0; --k) {
            phi_at = phi_at * p + Cyc(phi.coeff(k));
        }
        CHECK(phi_at.is_zero());
    }
}

TEST_CASE("as_rational")
{
    CHECK((z(3) + z(9)).as_rational() == Rational(0));
    CHECK((z(2) + z(2).inverse()).as_rational() == Rational(1));
    CHECK_THROWS_AS(z(1, 4).as_rational(), NotRational);
}

TEST_CASE("mixed orders promote to the lcm")
{
    const Cyc s = z(1, 4) + z(1, 6);
    CHECK(s.order() == 12);
    CHECK(s == z(3) + z(2));
    CHECK_THROWS_AS(Cyc::common(z(1, 4), z(1, 6), false), IncompatibleOrder);
}

TEST_CASE("sum of primitive roots is the Moebius function")
{
    for (int n = 1; n <= 12; ++n) {
        Cyc s;
        for (int j = 0; j < n; ++j) {
            if (std::gcd(j, n) == 1) {
                s += Cyc::root_of_unity(j, n);
            }
        }
        CHECK(s.as_rational() == Rational(moebius(n)));
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 200; ++t) {
        const Cyc a = random_cyc(rng, 12), b = random_cyc(rng, 12), c = random_cyc(rng, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyc(1));
        }
        CHECK(Cyc(12, a.coords()) == a);
    }
}
