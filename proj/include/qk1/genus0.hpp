#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qk1/calculus.hpp"
#include "qk1/tseries.hpp"

namespace qk1
{

// How t(q) is assembled from the coordinates t_n.
enum class Convention {
    monomial,      // t(q) = sum t_n (q-1)^n
    divided_power, // t(q) = sum t_n (q-1)^n / n!
};

std::string_view convention_name(Convention c);
Convention convention_from_name(std::string_view name); // throws Error

// Input t(q) with series-valued coefficients. Coordinates t_0..t_K come
// first among the series variables; each direction s_i contributes
// s_i/(1 - c_i q), whose pole 1/c_i sits near infinity, so that c_i is a
// near-zero point after q -> 1/q.
template <typename F>
struct InputT {
    using Fn = RatFun<F>;

    TSeries<Fn> t;
    Var var = Var::q;
    Convention convention = Convention::monomial;
    int coordinates = 0; // K + 1
    std::vector<F> near_zero;

    int cutoff() const { return t.cutoff(); }
    const typename TSeries<Fn>::Names &names() const { return t.names(); }
};

template <typename F>
TSeries<RatFun<F>> lift(const TSeries<F> &s)
{
    return s.map([](const F &c) { return RatFun<F>(c); });
}

template <typename F>
TSeries<F> value_at(const TSeries<RatFun<F>> &s, const F &at)
{
    return s.map([&](const RatFun<F> &c) { return c(at); });
}

template <typename F>
TSeries<RatFun<F>> scaled_by(const TSeries<RatFun<F>> &s, const RatFun<F> &c)
{
    return s.scaled(c);
}

template <typename F>
RatFun<F> linear(Var v, F c0, F c1)
{
    return RatFun<F>(v, Poly<F>(std::vector<F>{std::move(c0), std::move(c1)}));
}

// Input with `count` coordinates t_0..t_{count-1} and optional directions.
template <typename F>
InputT<F> make_input(int count, int cutoff, Convention conv = Convention::monomial, Var var = Var::q,
                     const std::vector<F> &directions = {})
{
    using Fn = RatFun<F>;
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) {
        names.push_back("t" + std::to_string(i));
    }
    for (std::size_t i = 0; i < directions.size(); ++i) {
        names.push_back("s" + std::to_string(i + 1));
    }
    auto shared = TSeries<Fn>::make_names(std::move(names));
    InputT<F> in;
    in.var = var;
    in.convention = conv;
    in.coordinates = count;
    in.t = TSeries<Fn>(shared, cutoff);
    const Fn qm1 = linear<F>(var, F(-1), F(1));
    Fn basis(1);
    for (int n = 0; n < count; ++n) {
        Fn b = basis;
        if (conv == Convention::divided_power) {
            b = b * Fn(F(factorial(n).inverse()));
        }
        in.t += TSeries<Fn>::variable(shared, cutoff, n, b);
        basis = basis * qm1;
    }
    for (std::size_t i = 0; i < directions.size(); ++i) {
        const Fn dir = Fn(1) / linear<F>(var, F(1), -directions[i]);
        in.t += TSeries<Fn>::variable(shared, cutoff, count + static_cast<int>(i), dir);
        in.near_zero.push_back(directions[i]);
    }
    return in;
}

// Taylor coefficients c_n of t(q) at q = 1, for n = 0..count-1.
template <typename F>
std::vector<TSeries<F>> taylor_at_one(const InputT<F> &in, int count)
{
    std::vector<TSeries<F>> c(static_cast<std::size_t>(count), TSeries<F>(in.names(), in.cutoff()));
    for (const auto &[m, f] : in.t.terms()) {
        const auto e = local_expansion(f, Center<F>::at(F(1)), count - 1);
        for (const auto &[k, v] : e.coeffs) {
            if (k < 0) {
                throw Error("input has a pole at q = 1");
            }
            c[static_cast<std::size_t>(k)].add(m, v);
        }
    }
    return c;
}

template <typename F>
TSeries<F> zero_series(const InputT<F> &in, int cutoff)
{
    return TSeries<F>(in.names(), cutoff);
}

// (1 - q) exp(tau/(1 - q)).
template <typename F>
TSeries<RatFun<F>> j_function(const TSeries<F> &tau, Var var = Var::q)
{
    const RatFun<F> omq = linear<F>(var, F(1), F(-1));
    return series_exp(lift(tau).scaled(omq.inverse())).scaled(omq);
}

// One application of the genus-0 map
//   T(tau) = t(1) + G^{-1} <<L Dt(L), 1>>_{0,2},  Dt(L) = (t(1) - t(L))/(1 - L),
// at the point, where G = e^tau and <<f(L), 1>>_{0,2} = Omega(f, e^{tau/(1-q)} - 1).
template <typename F>
TSeries<F> t_map(const TSeries<F> &tau, const InputT<F> &in)
{
    using Fn = RatFun<F>;
    const int d = tau.cutoff();
    const Var v = in.var;
    const TSeries<F> t1 = value_at(in.t, F(1)).truncated(d);
    const Fn L = Fn::variable(v);
    const Fn one_minus_L = Fn(1) - L;
    TSeries<Fn> f(in.names(), d);
    for (const auto &[m, c] : in.t.terms()) {
        f.add(m, L * (Fn(c(F(1))) - c) / one_minus_L);
    }
    const TSeries<Fn> g = series_exp(lift(tau).scaled(one_minus_L.inverse())) -
                          TSeries<Fn>::constant(in.names(), d, Fn(1));
    const TSeries<Fn> h = f.map([&](const Fn &c) { return c.substitute_inverse(v); }) * g;
    const Fn inv = L.inverse();
    const TSeries<F> omega = h.map([&](const Fn &c) { return residue_zero_infinity(c * inv, in.near_zero); });
    return t1 + series_exp(-tau) * omega;
}

template <typename F>
FixedPointResult<F> solve_tau_trace(const InputT<F> &in, int cutoff)
{
    return fixed_point([&](const TSeries<F> &tau) { return t_map(tau, in); }, zero_series(in, cutoff), cutoff);
}

template <typename F>
TSeries<F> solve_tau(const InputT<F> &in, int cutoff)
{
    return solve_tau_trace(in, cutoff).value;
}

// Independent oracle: tau = sum_n c_n tau^n / n!.
template <typename F>
TSeries<F> solve_tau_implicit(const InputT<F> &in, int cutoff)
{
    const auto c = taylor_at_one(in, cutoff + 1);
    auto phi = [&](const TSeries<F> &tau) {
        TSeries<F> acc(in.names(), cutoff);
        TSeries<F> power = TSeries<F>::constant(in.names(), cutoff, F(1));
        for (int n = 0; n <= cutoff; ++n) {
            acc += c[static_cast<std::size_t>(n)].truncated(cutoff) * power.scaled(F(factorial(n).inverse()));
            power *= tau;
        }
        return acc;
    };
    return fixed_point(phi, zero_series(in, cutoff), cutoff).value;
}

// tbar = [e^{tau/(q-1)}(t + 1 - q)]_+ - (1 - q), with [.]_+ removing the
// principal part at q = 1. Poles of the input at 1/c_i are formal (their
// expansions are Laurent polynomials term by term) and are kept.
template <typename F>
TSeries<RatFun<F>> sbar_unchecked(const InputT<F> &in, const TSeries<F> &tau)
{
    using Fn = RatFun<F>;
    const int d = std::min(tau.cutoff(), in.cutoff());
    const Fn qm1 = linear<F>(in.var, F(-1), F(1));
    const auto names = in.names();
    const TSeries<Fn> e = series_exp(lift(tau.truncated(d)).scaled(qm1.inverse()));
    const TSeries<Fn> shifted = in.t.truncated(d) - TSeries<Fn>::constant(names, d, qm1);
    TSeries<Fn> f = (e * shifted).map([&](const Fn &c) { return c - principal_part(c, F(1)); });
    f += TSeries<Fn>::constant(names, d, qm1);
    return f;
}

template <typename F>
TSeries<RatFun<F>> sbar_transform(const InputT<F> &in, const TSeries<F> &tau)
{
    auto tbar = sbar_unchecked(in, tau);
    if (!value_at(tbar, F(1)).is_zero()) {
        throw TauMismatch("tbar(1) != 0");
    }
    return tbar;
}

template <typename F>
struct TBarPair {
    TSeries<RatFun<F>> tbar_new;
    TSeries<RatFun<F>> tbar_fake;
};

// new  = e^{tau/(1-q)} (tbar + 1 - q) - (1 - q)
// fake = e^{tau/(1-q)} (1 - q) - (1 - q)
template <typename F>
TBarPair<F> tbar_new_fake(const TSeries<RatFun<F>> &tbar, const TSeries<F> &tau, Var var)
{
    using Fn = RatFun<F>;
    const int d = std::min(tbar.cutoff(), tau.cutoff());
    const Fn omq = linear<F>(var, F(1), F(-1));
    const auto names = tbar.names();
    const TSeries<Fn> e = series_exp(lift(tau.truncated(d)).scaled(omq.inverse()));
    const TSeries<Fn> c = TSeries<Fn>::constant(names, d, omq);
    return {e * (tbar.truncated(d) + c) - c, e * c - c};
}

// tbar_m = sum_n c_n tau^{n-m}/(n-m)!
template <typename F>
TSeries<F> tbar_scalar_coeffs(const InputT<F> &in, const TSeries<F> &tau, int m)
{
    const int d = tau.cutoff();
    const auto c = taylor_at_one(in, d + m + 1);
    TSeries<F> acc(in.names(), d);
    TSeries<F> power = TSeries<F>::constant(in.names(), d, F(1));
    for (int n = m; n <= d + m; ++n) {
        acc += c[static_cast<std::size_t>(n)].truncated(d) * power.scaled(F(factorial(n - m).inverse()));
        power *= tau;
    }
    return acc;
}

// Derivative of a genus-0 quantity along D = sum_n q^n/(1-q)^{n+1} d/dt_n,
// i.e. along the input direction 1/(1 - q x), in closed form.
template <typename F>
struct DClosedForms {
    TSeries<F> d_tau;                   // e^{q tau/(1-q)} / ((1 - tbar_1)(1 - q))
    TSeries<RatFun<F>> d_tbar_new;      // e^{tau/(1-x)} e^{q tau/(1-q)} / (1 - q x)
    TSeries<RatFun<F>> d_tbar_fake;     // e^{tau/(1-x)} D tau
};

template <typename F>
DClosedForms<F> d_closed_forms(const InputT<F> &in, const TSeries<F> &tau, const F &qv)
{
    using Fn = RatFun<F>;
    const int d = tau.cutoff();
    const auto names = in.names();
    const Var x = in.var;
    const F omq = F(1) - qv;
    const TSeries<F> one = TSeries<F>::constant(names, d, F(1));
    const TSeries<F> e_q = series_exp(tau.scaled(qv / omq));
    const TSeries<F> tb1 = tbar_scalar_coeffs(in, tau, 1);
    const TSeries<F> d_tau = (e_q * series_inverse(one - tb1)).scaled(F(1) / omq);
    const Fn omx = linear<F>(x, F(1), F(-1));
    const TSeries<Fn> e_x = series_exp(lift(tau).scaled(omx.inverse()));
    const Fn kernel = Fn(1) / linear<F>(x, F(1), -qv);
    return {d_tau, (e_x * lift(e_q)).scaled(kernel), e_x * lift(d_tau)};
}

} // namespace qk1
