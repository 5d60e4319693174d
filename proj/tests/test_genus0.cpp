#include <doctest.h>

#include "qk1/display.hpp"
#include "qk1/genus0.hpp"

using namespace qk1;

TEST_CASE("tau from the genus-0 map")
{
    const auto in = make_input<Rational>(4, 3);
    const auto tau = solve_tau(in, 3);
    CHECK(to_string(tau) == "t0 + t0*t1 + 1/2*t0^2*t2 + t0*t1^2");
    CHECK(tau == solve_tau_implicit(in, 3));
    const auto trace = solve_tau_trace(in, 3);
    for (std::size_t n = 0; n + 1 < trace.iterates.size(); ++n) {
        CHECK((trace.iterates[n + 1] - trace.iterates[n]).ideal_order().value >= static_cast<int>(n) + 1);
    }

    const auto dp = make_input<Rational>(4, 3, Convention::divided_power);
    CHECK(to_string(solve_tau(dp, 3)) == "t0 + t0*t1 + 1/4*t0^2*t2 + t0*t1^2");
    CHECK(solve_tau(dp, 3) == solve_tau_implicit(dp, 3));

    const auto deep = make_input<Rational>(6, 5);
    CHECK(solve_tau(deep, 5) == solve_tau_implicit(deep, 5));
}

TEST_CASE("tau for a directional input")
{
    const RQQ q1 = RQQ::variable(Var::q1);
    const RQQ q2 = RQQ(RQ::variable(Var::q2));
    const auto in = make_input<RQQ>(0, 2, Convention::monomial, Var::q, {q1, q2});
    CHECK(solve_tau(in, 2) == solve_tau_implicit(in, 2));
    const auto tau = solve_tau(in, 2);
    // linear part: s_i/(1 - q_i)
    CHECK(tau.coefficient(Monomial{1, 0}) == RQQ(1) / (RQQ(1) - q1));
}

TEST_CASE("tbar and its Taylor coefficients")
{
    const auto in = make_input<Rational>(4, 3);
    const auto tau = solve_tau(in, 3);
    const auto tbar = sbar_transform(in, tau);
    CHECK(value_at(tbar, Rational(1)).is_zero());
    for (int m = 1; m <= 3; ++m) {
        const auto bm = tbar_scalar_coeffs(in, tau, m);
        TSeries<Rational> from_expansion(in.names(), 3);
        for (const auto &[mono, f] : tbar.terms()) {
            from_expansion.add(mono, local_expansion(f, Center<Rational>::at(Rational(1)), m).coeff(m));
        }
        CHECK(bm == from_expansion);
    }
    CHECK_THROWS_AS(sbar_transform(in, tau + TSeries<Rational>::variable(in.names(), 3, 1)), TauMismatch);

    const auto pair = tbar_new_fake(tbar, tau, Var::q);
    CHECK(to_string(pair.tbar_fake.truncated(1)) == "t0");
    CHECK(pair.tbar_new.truncated(1) == in.t.truncated(1));
}

TEST_CASE("derivative closed forms agree with the direction 1/(1 - q x)")
{
    const RQ q = RQ::variable(Var::q);
    const int e = 4; // index of the extra direction
    const auto in = make_input<RQ>(4, 3, Convention::monomial, Var::x, {q});
    const auto tau = solve_tau(in, 3);
    const auto tbar = sbar_transform(in, tau);
    const auto pair = tbar_new_fake(tbar, tau, Var::x);
    const auto closed = d_closed_forms(in, tau, q);

    auto d = [&](const auto &s) { return s.partial_derivative(e).without(e); };
    CHECK(d(tau) == closed.d_tau.truncated(2).without(e));
    CHECK(d(pair.tbar_new) == closed.d_tbar_new.truncated(2).without(e));
    CHECK(d(pair.tbar_fake) == closed.d_tbar_fake.truncated(2).without(e));

    // at t = 0: D(tbar_new - tbar_fake) = 1/(1 - q x) - 1/(1 - q)
    using Fx = RatFun<RQ>;
    const Fx X = Fx::variable(Var::x);
    CHECK(d(pair.tbar_new - pair.tbar_fake).constant_term() == Fx(1) / (Fx(1) - Fx(q) * X) - Fx(RQ(1) / (RQ(1) - q)));
}

TEST_CASE("J-function against genus-0 one-point correlators")
{
    // <<1/(1-qL)>>_{0,1} = sum_n tau^n/n! sum_k q^k chi(M_{0,n+1}, L_1^k), chi = C(n-2+k, k).
    const int m = 8, taylor = 11;
    const auto names = TSeries<Rational>::make_names({"tau"});
    const auto tau = TSeries<Rational>::variable(names, m, 0);
    const RQ q = RQ::variable(Var::q);
    auto corr = j_function(tau);
    corr -= TSeries<RQ>::constant(names, m, RQ(1) - q);
    corr -= TSeries<RQ>::variable(names, m, 0);
    for (int n = 0; n <= m; ++n) {
        const RQ c = corr.coefficient(Monomial{n});
        if (n < 2) {
            CHECK(c.is_zero());
            continue;
        }
        const auto series = detail::series_quotient(c.num(), c.den(), taylor);
        Rational nfact(1);
        for (int i = 2; i <= n; ++i) {
            nfact = nfact * Rational(i);
        }
        Rational chi(1);
        for (int k = 0; k < taylor; ++k) {
            if (k > 0) {
                chi = chi * Rational(n - 2 + k) / Rational(k);
            }
            CHECK(series[static_cast<std::size_t>(k)] * nfact == chi);
        }
    }
}
