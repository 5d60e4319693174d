#include <doctest.h>

#include <random>

#include "qk1/display.hpp"
#include "qk1/modular.hpp"
#include "qk1/ratfun.hpp"

using namespace qk1;

namespace
{

// Plain Euclid as the reference.
template <typename F>
Poly<F> euclid(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero_poly()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly<Rational> random_q(std::mt19937_64 &rng, int degree)
{
    std::uniform_int_distribution<int> n(-6, 6), d(1, 3);
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) {
        c.emplace_back(n(rng), d(rng));
    }
    c.emplace_back(1 + (n(rng) + 6) % 3);
    return Poly<Rational>(std::move(c));
}

Poly<Cyc> random_c(std::mt19937_64 &rng, int degree)
{
    std::uniform_int_distribution<int> n(-4, 4), k(0, 11);
    std::vector<Cyc> c;
    for (int i = 0; i <= degree; ++i) {
        c.push_back(Cyc(Rational(n(rng))) + Cyc::root_of_unity(k(rng), 12));
    }
    if (c.back().is_zero()) {
        c.back() = Cyc(1);
    }
    return Poly<Cyc>(std::move(c));
}

} // namespace

TEST_CASE("modulus")
{
    const auto p = modp::prime();
    CHECK(p > (modp::u64(1) << 60));
    CHECK(p % 720720 == 1);
    CHECK(modp::mul(modp::inv(12345), 12345) == 1);
}

TEST_CASE("gcd over Q agrees with Euclid")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const auto g = random_q(rng, t % 4);
        const auto a = g * random_q(rng, 1 + t % 5), b = g * random_q(rng, 2 + t % 3);
        const auto want = euclid(a, b);
        CHECK(gcd(a, b) == want);
        CHECK(gcd(b, a) == want);
        CHECK((a % gcd(a, b)).is_zero_poly());
    }
}

TEST_CASE("gcd over Q(zeta_12) agrees with Euclid")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_c(rng, t % 3);
        const auto a = g * random_c(rng, 1 + t % 3), b = g * random_c(rng, 1 + t % 4);
        CHECK(gcd(a, b) == euclid(a, b));
    }
}

TEST_CASE("gcd over Q(q2)")
{
    using RQ = RatFun<Rational>;
    const RQ y = RQ::variable(Var::q2), one(1);
    auto P = [](std::vector<RQ> c) { return Poly<RQ>(std::move(c)); };
    // (x - y)(x + 1/(1 - y)) and (x - y)(x - y^2)
    const auto g = P({-y, one});
    const auto a = g * P({one / (one - y), one}), b = g * P({-y * y, one});
    CHECK(gcd(a, b) == g);
    CHECK(gcd(a, a) == a.monic());
    CHECK(gcd(P({one / (one - y), one}), P({-y * y, one})).degree() == 0);
    const auto c = g * g * P({y, one});
    CHECK(gcd(c, a * g) == euclid(c, a * g));
}
