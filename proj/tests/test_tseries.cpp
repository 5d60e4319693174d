#include <doctest.h>

#include <random>

#include "qk1/tseries.hpp"

using namespace qk1;

namespace
{

using S = TSeries<Rational>;

S var(int i, int cutoff, int nvars = 4) { return S::variable(S::t_names(nvars), cutoff, i); }
S cst(Rational c, int cutoff, int nvars = 4) { return S::constant(S::t_names(nvars), cutoff, c); }

Monomial mono(std::initializer_list<int> e, int nvars = 4)
{
    Monomial m(e);
    m.resize(static_cast<std::size_t>(nvars), 0);
    return m;
}

S random_series(std::mt19937_64 &rng, int cutoff, bool constant_one)
{
    std::uniform_int_distribution<int> c(-4, 4);
    S s = cst(constant_one ? 1 : 0, cutoff, 3);
    for (int a = 0; a <= cutoff; ++a) {
        for (int b = 0; a + b <= cutoff; ++b) {
            for (int d = 0; a + b + d <= cutoff; ++d) {
                if (a + b + d > 0) {
                    s.add(Monomial{a, b, d}, Rational(c(rng), 1 + (a + b) % 3));
                }
            }
        }
    }
    return s;
}

} // namespace

TEST_CASE("ring operations")
{
    CHECK(var(0, 3) * var(1, 3) == [] {
        S s(S::t_names(4), 3);
        s.add(mono({1, 1}), 1);
        return s;
    }());
    const S sq = (var(0, 2) + var(1, 2)) * (var(0, 2) + var(1, 2));
    CHECK(to_string(sq) == "t0^2 + 2*t0*t1 + t1^2");
    const S big = var(0, 3) * var(0, 3) * var(2, 3);
    CHECK((big * var(1, 3)).is_zero());
    CHECK((var(0, 3) + var(0, 2)).cutoff() == 2);
    S a = var(0, 3);
    a.strict();
    CHECK_THROWS_AS(a + var(0, 2), IncompatibleCutoff);
}

TEST_CASE("exp and log")
{
    CHECK(series_exp(S(S::t_names(4), 3)) == cst(1, 3));
    CHECK_THROWS_AS(series_exp(cst(1, 3)), NonzeroConstantTerm);
    CHECK_THROWS_AS(series_log(cst(2, 3)), ConstantTermNotOne);
    CHECK(series_log(cst(1, 3)).is_zero());

    const S arg = cst(1, 2) + var(1, 2) + var(0, 2) * var(2, 2) + var(1, 2) * var(1, 2);
    CHECK(to_string(series_log(arg)) == "t1 + t0*t2 + 1/2*t1^2");
    const S p = cst(1, 4) + var(0, 4);
    CHECK(series_exp(series_log(p)) == p);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const S s = random_series(rng, 4, false);
        CHECK(series_log(series_exp(s)) == s);
        const S u = random_series(rng, 4, true);
        CHECK(series_exp(series_log(u)) == u);
    }
}

TEST_CASE("derivatives and coefficients")
{
    const S f = (var(0, 3) * var(0, 3) * var(2, 3)).scaled(Rational(1, 2));
    CHECK(f.partial_derivative(0) == (var(0, 2) * var(2, 2)));
    CHECK((var(0, 3) * var(1, 3)).partial_derivative(1) == var(0, 2));
    CHECK((var(0, 3) * var(1, 3)).coefficient(mono({1, 1})) == Rational(1));
    CHECK_THROWS_AS(var(0, 2).coefficient(mono({3})), IndexBeyondCutoff);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const S s = random_series(rng, 4, false), u = random_series(rng, 4, true);
        for (int k = 0; k < 3; ++k) {
            CHECK((s * u).partial_derivative(k) ==
                  s.partial_derivative(k) * u.truncated(3) + s.truncated(3) * u.partial_derivative(k));
        }
    }
}

TEST_CASE("fixed point")
{
    const S t0 = var(0, 4), t1 = var(1, 4);
    const auto r = fixed_point([&](const S &tau) { return t0 + t1 * tau; }, S(S::t_names(4), 4), 4);
    CHECK(r.value == t0 * (cst(1, 4) + t1 + t1 * t1 + t1 * t1 * t1));
    for (std::size_t n = 0; n + 1 < r.iterates.size(); ++n) {
        CHECK((r.iterates[n + 1] - r.iterates[n]).ideal_order().value >= static_cast<int>(n) + 1);
    }
    CHECK(fixed_point([&](const S &tau) { return tau.scaled(0); }, S(S::t_names(4), 4), 4).value.is_zero());
    CHECK_THROWS_AS(fixed_point([&](const S &tau) { return cst(1, 4) - tau + t0; }, S(S::t_names(4), 4), 4),
                    NoContraction);
}
