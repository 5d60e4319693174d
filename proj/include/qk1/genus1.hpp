#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qk1/genus0.hpp"

namespace qk1
{

// Genus-1 correlators of the point that the reconstruction consumes.
struct CorrelatorTable {
    RQ one_point;      // <1/(1-qL)>_{1,1}
    RQ two_point_unit; // <1/(1-qL), 1>_{1,2}
    RCC hodge_mixed;   // chi(M_{1,1}, 1/(1-x H*) 1/(1-qL)), x over Q(zeta_12)(q)
    Rational f1_one{1};  // <1>_{1,1}
    Rational f1_two{1};  // <1,1>_{1,2}

    // Parsed from the stored expressions and checked on first use.
    static const CorrelatorTable &standard();
};

extern const char *const kOnePointText;
extern const char *const kTwoPointUnitText;
extern const char *const kLeeQuText;

// The seven partial-fraction atoms of hodge_mixed, in x and q.
const std::vector<std::string> &hodge_atom_texts();

// Throws Error when a stored closed form disagrees with its re-derivation.
void verify_table(const CorrelatorTable &table);

// <1/(1 - q1 L), 1/(1 - q2 L)>_{1,2} in closed form, as Q(q2)(q1).
RQQ leequ_reference();

// [a^n] (1 - q2) LQ(q, q2) at q2 = a/(1 + a), n = 0..count-1: the
// coefficient of t_n in D F_1 at first order.
std::vector<RQ> leequ_first_order(int count);

// f(q2, q1).
RQQ swapped(const RQQ &f);

// Weight of the coordinate t_n in D_i, as a function of q_i.
RQ coordinate_weight(int n, Var v, Convention conv);

// D_1 D_2 F at t = 0 from the quadratic part of F in the coordinates.
RQQ extract_two_point(const TSeries<Rational> &f, Convention conv);

// Double Taylor grid [q1^i q2^j] f for 0 <= i, j < n.
std::vector<std::vector<Rational>> taylor_grid(const RQQ &f, int n);

inline int genus1_cutoff(int d)
{
    if (d < 1) {
        throw UnsupportedOrder("order must be at least 1");
    }
    return d - 1;
}

// F_1(tau) = <1>_{1,1} tau + <1,1>_{1,2} tau^2/2 modulo I^D.
template <typename F>
TSeries<F> f1_primary(const TSeries<F> &tau, int d, const CorrelatorTable &table = CorrelatorTable::standard())
{
    if (d > 3) {
        throw UnsupportedOrder("F_1(tau) is known only modulo I^3");
    }
    const int c = genus1_cutoff(d);
    const TSeries<F> t = tau.truncated(c);
    return t.scaled(F(table.f1_one)) + (t * t).scaled(F(table.f1_two / Rational(2)));
}

// (1/24) log det(d tau/d t_0) = -(1/24) log(1 - tbar_1).
template <typename F>
TSeries<F> logdet_term(const InputT<F> &in, const TSeries<F> &tau, int d)
{
    const int c = genus1_cutoff(d);
    const TSeries<F> t = tau.truncated(c);
    const TSeries<F> one = TSeries<F>::constant(in.names(), c, F(1));
    return series_log(one - tbar_scalar_coeffs(in, t, 1)).scaled(F(Rational(-1, 24)));
}

// Independent route: (1/24) log of d tau/d t_0, with tau known to order d.
template <typename F>
TSeries<F> logdet_by_differentiation(const TSeries<F> &tau, int d)
{
    if (tau.cutoff() < d) {
        throw IncompatibleCutoff("tau must be known modulo I^{D+1}");
    }
    return series_log(tau.truncated(d).partial_derivative(0)).scaled(F(Rational(1, 24)));
}

template <typename F>
struct Ftw1Parts {
    TSeries<F> n0; // <u/(1-xL)>_{1,1} term
    TSeries<F> n1; // (1/2) <u/(1-xL), u>_{1,2} term
    std::vector<std::pair<std::string, TSeries<F>>> by_center;

    TSeries<F> total() const { return n0 + n1; }
};

namespace detail
{

template <typename F>
std::string center_label(const F &a)
{
    using qk1::to_string;
    return to_string(a);
}

// The two residue integrands of F_1^tw, as series in the variable x.
template <typename F>
std::pair<TSeries<RatFun<F>>, TSeries<RatFun<F>>> ftw1_integrands(const TSeries<RatFun<F>> &u, int d,
                                                                  const CorrelatorTable &table)
{
    using Fn = RatFun<F>;
    const int c = genus1_cutoff(d);
    const TSeries<Fn> ut = u.truncated(c);
    if (!is_zero(ut.constant_term())) {
        throw Error("F_1^tw needs an input in the ideal I");
    }
    const TSeries<Fn> v = ut.map([](const Fn &f) { return f.substitute_inverse(Var::x); });
    if (!(v * v * v).is_zero()) {
        throw MissingCorrelatorData("an n >= 2 term survives; <...>_{1,3} of the point is not available");
    }
    if (d > 3) {
        throw UnsupportedOrder("F_1^tw is assembled only modulo I^3");
    }
    const Fn x = Fn::variable(Var::x);
    const Fn g1 = embed<F>(table.one_point.with_var(Var::x));
    const Fn g2 = embed<F>(table.two_point_unit.with_var(Var::x));
    return {v.scaled(g1 / x), (v * v).scaled(g2 / (Fn(2) * x))};
}

template <typename F>
TSeries<F> residue_series(const TSeries<RatFun<F>> &s, const Center<F> &c)
{
    return s.map([&](const RatFun<F> &f) { return residue_at(f, c); });
}

} // namespace detail

// F_1^tw(u) = sum over {0, 1, inf} and the near-zero points of
// Res_x [u(1/x) <1/(1-xL)>_{1,1} + u(1/x)^2/2 <1/(1-xL), 1>_{1,2}] dx/x.
template <typename F>
Ftw1Parts<F> ftw1_parts(const TSeries<RatFun<F>> &u, int d, const std::vector<F> &near_zero = {},
                        const CorrelatorTable &table = CorrelatorTable::standard())
{
    const auto [i0, i1] = detail::ftw1_integrands<F>(u, d, table);
    std::vector<std::pair<std::string, Center<F>>> centers{
        {"0", Center<F>::zero()}, {"1", Center<F>::at(F(1))}, {"inf", Center<F>::infinity()}};
    for (const auto &a : near_zero) {
        centers.emplace_back(detail::center_label(a), Center<F>::at(a));
    }
    Ftw1Parts<F> out{TSeries<F>(u.names(), i0.cutoff()), TSeries<F>(u.names(), i0.cutoff()), {}};
    for (const auto &[label, c] : centers) {
        const TSeries<F> r0 = detail::residue_series(i0, c);
        const TSeries<F> r1 = detail::residue_series(i1, c);
        out.n0 += r0;
        out.n1 += r1;
        out.by_center.emplace_back(label, r0 + r1);
    }
    return out;
}

template <typename F>
TSeries<F> ftw1(const TSeries<RatFun<F>> &u, int d, const std::vector<F> &near_zero = {},
                const CorrelatorTable &table = CorrelatorTable::standard())
{
    return ftw1_parts(u, d, near_zero, table).total();
}

// The same quantity as minus the residues at the N-th roots of unity other
// than 1, computed over Q(zeta_N). Single residues are not rational, so
// by_center stays empty.
template <typename F>
Ftw1Parts<F> ftw1_via_roots_parts(const TSeries<RatFun<F>> &u, int d, int order = 12,
                                  const CorrelatorTable &table = CorrelatorTable::standard())
{
    using C = CycOf<F>;
    using Cn = RatFun<C>;
    const auto [i0, i1] = detail::ftw1_integrands<F>(u, d, table);
    auto lift = [](const TSeries<RatFun<F>> &s) {
        return s.map([](const RatFun<F> &f) { return convert<Cn>(f); });
    };
    const TSeries<Cn> c0 = lift(i0), c1 = lift(i1);
    TSeries<C> s0(u.names(), i0.cutoff()), s1(u.names(), i0.cutoff());
    Ftw1Parts<F> out{TSeries<F>(u.names(), i0.cutoff()), TSeries<F>(u.names(), i0.cutoff()), {}};
    for (int k = 1; k < order; ++k) {
        const Center<C> z = Center<C>::at(C(Cyc::root_of_unity(k, order)));
        const TSeries<C> r0 = detail::residue_series(c0, z), r1 = detail::residue_series(c1, z);
        s0 += r0;
        s1 += r1;
    }
    out.n0 = (-s0).map([](const C &v) { return convert<F>(v); });
    out.n1 = (-s1).map([](const C &v) { return convert<F>(v); });
    return out;
}

template <typename F>
TSeries<F> ftw1_via_roots(const TSeries<RatFun<F>> &u, int d, int order = 12,
                          const CorrelatorTable &table = CorrelatorTable::standard())
{
    return ftw1_via_roots_parts(u, d, order, table).total();
}

template <typename F>
struct Theorem1Parts {
    TSeries<F> tau;
    TSeries<RatFun<F>> tbar_new;
    TSeries<RatFun<F>> tbar_fake;
    TSeries<F> f1;
    TSeries<F> logdet;
    Ftw1Parts<F> ftw_new;
    Ftw1Parts<F> ftw_fake;
    TSeries<F> total;
};

// F_1(tau) + (1/24) log det + F_1^tw(tbar_new) - F_1^tw(tbar_fake), modulo I^D.
template <typename F>
Theorem1Parts<F> theorem1_parts(const InputT<F> &in, int d, const CorrelatorTable &table = CorrelatorTable::standard())
{
    if (d > 3) {
        throw UnsupportedOrder("genus-1 reconstruction of the point is available modulo I^3");
    }
    const int c = genus1_cutoff(d);
    Theorem1Parts<F> p;
    p.tau = solve_tau(in, c);
    const auto tbar = sbar_transform(in, p.tau);
    auto pair = tbar_new_fake(tbar, p.tau, in.var);
    p.tbar_new = std::move(pair.tbar_new);
    p.tbar_fake = std::move(pair.tbar_fake);
    p.f1 = f1_primary(p.tau, d, table);
    p.logdet = logdet_term(in, p.tau, d);
    p.ftw_new = ftw1_parts(p.tbar_new, d, in.near_zero, table);
    p.ftw_fake = ftw1_parts(p.tbar_fake, d, in.near_zero, table);
    p.total = p.f1 + p.logdet + p.ftw_new.total() - p.ftw_fake.total();
    return p;
}

template <typename F>
TSeries<F> theorem1_total(const InputT<F> &in, int d, const CorrelatorTable &table = CorrelatorTable::standard())
{
    return theorem1_parts(in, d, table).total;
}

// Coefficient of s1*s2 for an input built from two directions only.
template <typename F>
F two_point_coefficient(const TSeries<F> &f, int first_direction)
{
    Monomial m(f.names()->size(), 0);
    m[static_cast<std::size_t>(first_direction)] = 1;
    m[static_cast<std::size_t>(first_direction) + 1] = 1;
    return f.coefficient(m);
}

// <1/(1 - q1 L), 1/(1 - q2 L)>_{1,2} by Theorem 1 along the two directions.
RQQ two_point_by_reconstruction(const CorrelatorTable &table = CorrelatorTable::standard());

template <typename F>
struct Theorem2Parts {
    TSeries<F> first;      // F_1'(tau) D tau
    TSeries<F> correction; // (1/24)(tbar_2/(1 - tbar_1) + q/(1 - q)) D tau
    TSeries<F> residues_new;
    TSeries<F> residues_fake;
    TSeries<F> total;
};

// D F_1 along D = sum_n q^n/(1-q)^{n+1} d/dt_n, assembled from the closed
// forms of D tau and D tbar. The input lives in the variable x and `qv` is
// the value of q in F.
template <typename F>
Theorem2Parts<F> theorem2_parts(const InputT<F> &in, const F &qv, int d,
                                const CorrelatorTable &table = CorrelatorTable::standard())
{
    using Fn = RatFun<F>;
    if (d == 3) {
        throw MissingCorrelatorData("D F_1 modulo I^3 needs <...>_{1,3} of the point");
    }
    if (d > 3) {
        throw UnsupportedOrder("D F_1 is assembled only modulo I^2");
    }
    const int c = genus1_cutoff(d);
    const auto names = in.names();
    const TSeries<F> tau = solve_tau(in, c);
    const auto closed = d_closed_forms(in, tau, qv);
    const TSeries<F> one = TSeries<F>::constant(names, c, F(1));
    const TSeries<F> tb1 = tbar_scalar_coeffs(in, tau, 1);
    const TSeries<F> tb2 = tbar_scalar_coeffs(in, tau, 2);

    Theorem2Parts<F> p;
    const TSeries<F> f1_prime = one.scaled(F(table.f1_one)) + tau.scaled(F(table.f1_two));
    p.first = f1_prime * closed.d_tau;
    p.correction = (tb2 * series_inverse(one - tb1) + one.scaled(qv / (F(1) - qv))) * closed.d_tau;
    p.correction = p.correction.scaled(F(Rational(1, 24)));

    const auto tbar = sbar_transform(in, tau);
    const auto pair = tbar_new_fake(tbar, tau, in.var);
    const Fn x = Fn::variable(Var::x);
    const Fn g1 = embed<F>(table.one_point.with_var(Var::x)) / x;
    const Fn g2 = embed<F>(table.two_point_unit.with_var(Var::x)) / x;
    auto inv = [](const TSeries<Fn> &s) { return s.map([](const Fn &f) { return f.substitute_inverse(Var::x); }); };
    auto integrand = [&](const TSeries<Fn> &dt, const TSeries<Fn> &t) {
        const TSeries<Fn> a = inv(dt), b = inv(t);
        if (!(a * b * b).is_zero()) {
            throw MissingCorrelatorData("an n >= 2 term survives");
        }
        return a.scaled(g1) + (a * b).scaled(g2);
    };
    std::vector<Center<F>> centers{Center<F>::zero(), Center<F>::at(F(1)), Center<F>::infinity(), Center<F>::at(qv)};
    for (const auto &a : in.near_zero) {
        if (!(a == qv)) {
            centers.push_back(Center<F>::at(a));
        }
    }
    auto residues = [&](const TSeries<Fn> &s) {
        TSeries<F> acc(names, c);
        for (const auto &ctr : centers) {
            acc += detail::residue_series(s, ctr);
        }
        return acc;
    };
    p.residues_new = residues(integrand(closed.d_tbar_new.truncated(c), pair.tbar_new));
    p.residues_fake = residues(integrand(closed.d_tbar_fake.truncated(c), pair.tbar_fake));
    p.total = p.first + p.correction + p.residues_new - p.residues_fake;
    return p;
}

// Names {"tau"}: series in tau with coefficients in Q(q).
using TauSeries = TSeries<RQ>;

// Sum over a in {0, inf, q} of Res_a e^{(1-x)tau} e^{q tau/(1-q)}
// <1/(1-xL)>_{1,1} / (1 - q/x) dx/x, to tau-order m.
TauSeries prop31_rhs(int m, const CorrelatorTable &table = CorrelatorTable::standard());

// The same differential through minus its residues at the 12-th roots of unity.
TauSeries prop31_rhs_roots(int m, const CorrelatorTable &table = CorrelatorTable::standard());

// hodge_substitute applied to the stored Hodge table.
TauSeries prop31_closed(int m, const CorrelatorTable &table = CorrelatorTable::standard());

// Replace 1/(1 - zeta x) by exp(tau/(1-q) - zeta tau) and 1/(1 - zeta x)^2 by
// (1 - zeta tau) exp(tau/(1-q) - zeta tau). Throws UnsupportedAtom for
// multiplicity above 2, poles at x = 0 or a polynomial part of degree >= 1.
TSeries<RC> hodge_substitute(const RCC &expr, int m, int cyclotomic_order = 12);

// The term-by-term display of the substituted Hodge table.
TauSeries prop31_total_display(int m);
// The regrouped display with poles 1/(1 - zeta q), exponents e^{-zeta tau} and
// e^{-zeta^{-1} tau}. `flipped_sign` uses e^{zeta tau} and e^{zeta^{-1} tau}.
TauSeries prop31_simplified_display(int m, bool flipped_sign = false);

// Coefficient of tau^k of a tau series.
template <typename R>
R tau_coefficient(const TSeries<R> &s, int k)
{
    return s.coefficient(Monomial{k});
}

} // namespace qk1
