#pragma once

#include <algorithm>

#include <map>
#include <optional>
#include <vector>

#include "qk1/ratfun.hpp"

namespace qk1
{

// Expansion point: a field element (zero included) or infinity.
template <typename F>
struct Center {
    bool infinite = false;
    F value{};

    static Center zero() { return {false, F(0)}; }
    static Center at(F a) { return {false, std::move(a)}; }
    static Center infinity() { return {true, F(0)}; }
};

template <typename F>
struct LaurentPoly {
    Var var = Var::none;
    std::map<int, F> coeffs; // no stored zeros

    void add(int k, const F &c)
    {
        if (is_zero(c)) {
            return;
        }
        auto [it, inserted] = coeffs.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) {
                coeffs.erase(it);
            }
        }
    }

    F coeff(int k) const
    {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? F(0) : it->second;
    }

    RatFun<F> to_ratfun() const
    {
        if (coeffs.empty()) {
            return RatFun<F>();
        }
        const int low = std::min(0, coeffs.begin()->first);
        std::vector<F> v(static_cast<std::size_t>(coeffs.rbegin()->first - low + 1), F(0));
        for (const auto &[k, c] : coeffs) {
            v[static_cast<std::size_t>(k - low)] = c;
        }
        return RatFun<F>(var, Poly<F>(std::move(v)), Poly<F>::monomial(F(1), -low));
    }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.coeffs == b.coeffs; }
};

// Coefficients of (q-a)^k at a finite center, of q^{-k} at infinity, for
// valuation <= k <= order.
template <typename F>
struct LocalExpansion {
    Center<F> center;
    int order = 0;
    std::map<int, F> coeffs;

    F coeff(int k) const
    {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? F(0) : it->second;
    }
    int valuation() const { return coeffs.empty() ? order + 1 : coeffs.begin()->first; }
};

namespace detail
{

// First `count` coefficients of the power series n/d, d(0) != 0.
template <typename F>
std::vector<F> series_quotient(const Poly<F> &n, const Poly<F> &d, int count)
{
    std::vector<F> c;
    if (count <= 0) {
        return c;
    }
    c.reserve(static_cast<std::size_t>(count));
    const F inv = F(1) / d.coeff(0);
    for (int j = 0; j < count; ++j) {
        F acc = n.coeff(j);
        const int top = std::min(j, d.degree());
        for (int i = 1; i <= top; ++i) {
            const F &di = d.coeffs()[static_cast<std::size_t>(i)];
            if (!is_zero(di)) {
                acc -= di * c[static_cast<std::size_t>(j - i)];
            }
        }
        c.push_back(acc * inv);
    }
    return c;
}

// Numerator and denominator of f in the local coordinate u at the center
// (u = q - a, or u = 1/q at infinity).
template <typename F>
std::pair<Poly<F>, Poly<F>> local_pair(const RatFun<F> &f, const Center<F> &c)
{
    if (c.infinite) {
        const RatFun<F> g = f.substitute_inverse(Var::u);
        return {g.num(), g.den()};
    }
    return {f.num().taylor_shift(c.value), f.den().taylor_shift(c.value)};
}

} // namespace detail

template <typename F>
LocalExpansion<F> local_expansion(const RatFun<F> &f, const Center<F> &center, int order)
{
    LocalExpansion<F> e{center, order, {}};
    if (f.is_zero()) {
        return e;
    }
    auto [n, d] = detail::local_pair(f, center);
    const int v = d.valuation();
    Poly<F> dd(std::vector<F>(d.coeffs().begin() + v, d.coeffs().end()));
    const auto c = detail::series_quotient(n, dd, order + v + 1);
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        if (!is_zero(c[static_cast<std::size_t>(j)])) {
            e.coeffs.emplace(j - v, c[static_cast<std::size_t>(j)]);
        }
    }
    return e;
}

// Residue of the differential f dq.
template <typename F>
F residue_at(const RatFun<F> &f, const Center<F> &center)
{
    if (f.is_zero()) {
        return F(0);
    }
    if (center.infinite) {
        // Res_inf f dq = -[q^{-1}] f
        return -local_expansion(f, center, 1).coeff(1);
    }
    auto [n, d] = detail::local_pair(f, center);
    const int v = d.valuation();
    if (v == 0) {
        return F(0);
    }
    Poly<F> dd(std::vector<F>(d.coeffs().begin() + v, d.coeffs().end()));
    return detail::series_quotient(n, dd, v).back();
}

template <typename F>
F residue_at(const RatFun<F> &f, const F &a)
{
    return residue_at(f, Center<F>::at(a));
}

// Principal part of f at a finite center, as a rational function.
template <typename F>
RatFun<F> principal_part(const RatFun<F> &f, const F &a)
{
    const auto e = local_expansion(f, Center<F>::at(a), -1);
    if (e.coeffs.empty()) {
        return RatFun<F>();
    }
    const int v = -e.coeffs.begin()->first;
    std::vector<F> u(static_cast<std::size_t>(v), F(0));
    for (const auto &[k, c] : e.coeffs) {
        u[static_cast<std::size_t>(k + v)] = c;
    }
    const Poly<F> shift = Poly<F>(std::vector<F>{-a, F(1)});
    return RatFun<F>(f.var(), Poly<F>(std::move(u)).taylor_shift(-a), pow(shift, v));
}

template <typename F>
struct PartialFractionTerm {
    F pole;
    int multiplicity;
    F coeff; // coeff / (q - pole)^multiplicity
};

template <typename F>
struct PartialFractions {
    Var var = Var::none;
    Poly<F> polynomial;
    std::vector<PartialFractionTerm<F>> terms;

    RatFun<F> recombine() const
    {
        // Common denominator prod (x - a)^m over the distinct poles.
        std::vector<std::pair<F, int>> top;
        for (const auto &t : terms) {
            auto it = std::find_if(top.begin(), top.end(), [&](const auto &p) { return p.first == t.pole; });
            if (it == top.end()) {
                top.emplace_back(t.pole, t.multiplicity);
            } else {
                it->second = std::max(it->second, t.multiplicity);
            }
        }
        auto lin = [](const F &a) { return Poly<F>(std::vector<F>{-a, F(1)}); };
        Poly<F> den(F(1));
        for (const auto &[a, m] : top) {
            den = den * pow(lin(a), m);
        }
        Poly<F> num = polynomial * den;
        for (const auto &t : terms) {
            Poly<F> rest(t.coeff);
            for (const auto &[a, m] : top) {
                rest = rest * pow(lin(a), a == t.pole ? m - t.multiplicity : m);
            }
            num += rest;
        }
        return RatFun<F>(var, std::move(num), std::move(den));
    }
};

namespace detail
{

template <typename F>
int strip_root(Poly<F> &p, const F &a)
{
    const Poly<F> lin(std::vector<F>{-a, F(1)});
    int m = 0;
    while (p.degree() > 0 && is_zero(p(a))) {
        p = p / lin;
        ++m;
    }
    return m;
}

template <typename F>
std::vector<F> rational_root_candidates(const Poly<F> &)
{
    return {};
}

std::vector<Rational> rational_root_candidates(const Poly<Rational> &p);

} // namespace detail

// Splits f over its coefficient field. Candidate poles are 0, the N-th roots
// of unity available in F, the hinted points, rational roots (over Q) and any
// leftover power of a linear factor.
template <typename F>
PartialFractions<F> partial_fractions(const RatFun<F> &f, int cyclotomic_order = 12,
                                      const std::vector<F> &hints = {})
{
    PartialFractions<F> out;
    out.var = f.var();
    auto [quo, rem] = divmod(f.num(), f.den());
    out.polynomial = quo;

    std::vector<F> candidates{F(0)};
    if constexpr (FieldTraits<F>::has_roots_of_unity) {
        for (int k = 0; k < cyclotomic_order; ++k) {
            candidates.push_back(root_of_unity<F>(k, cyclotomic_order));
        }
    } else {
        candidates.push_back(F(1));
        candidates.push_back(F(-1));
    }
    candidates.insert(candidates.end(), hints.begin(), hints.end());

    Poly<F> rest = f.den();
    std::vector<std::pair<F, int>> poles;
    auto take = [&](const F &a) {
        if (const int m = detail::strip_root(rest, a); m > 0) {
            poles.emplace_back(a, m);
        }
    };
    for (const auto &a : candidates) {
        if (rest.degree() < 1) {
            break;
        }
        take(a);
    }
    if (rest.degree() > 1) {
        for (const auto &a : detail::rational_root_candidates(rest)) {
            if (rest.degree() < 1) {
                break;
            }
            take(a);
        }
    }
    if (rest.degree() >= 1) {
        // rest = lead * (q - a)^k ?
        const int k = rest.degree();
        const F a = -rest.coeff(k - 1) / (rest.lead() * F(k));
        const Poly<F> lin(std::vector<F>{-a, F(1)});
        if (!(pow(lin, k).scaled(rest.lead()) == rest)) {
            throw IrreducibleDenominator("denominator factor of degree " + std::to_string(k) +
                                         " does not split over the coefficient field");
        }
        take(a);
    }
    const RatFun<F> proper(f.var(), rem, f.den());
    for (const auto &[a, m] : poles) {
        const auto e = local_expansion(proper, Center<F>::at(a), -1);
        for (int k = m; k >= 1; --k) {
            const F c = e.coeff(-k);
            if (!is_zero(c)) {
                out.terms.push_back({a, k, c});
            }
        }
    }
    return out;
}

// [f]_+ : polynomial quotient plus principal part at 0. Splits the
// denominator as q^k * d0 and separates with a Bezout identity.
template <typename F>
LaurentPoly<F> laurent_part(const RatFun<F> &f)
{
    LaurentPoly<F> out;
    out.var = f.var();
    auto [quo, rem] = divmod(f.num(), f.den());
    for (int i = 0; i <= quo.degree(); ++i) {
        out.add(i, quo.coeff(i));
    }
    const int k = f.den().valuation();
    if (k <= 0 || rem.is_zero_poly()) {
        return out;
    }
    const Poly<F> qk = Poly<F>::monomial(F(1), k);
    const Poly<F> d0 = f.den() / qk;
    // s*q^k + t*d0 = 1, so rem/(q^k d0) = rem*t/q^k + rem*s/d0.
    const auto eg = ext_gcd(qk, d0);
    const Poly<F> a = (rem * eg.t) % qk;
    for (int i = 0; i <= a.degree(); ++i) {
        out.add(i - k, a.coeff(i));
    }
    return out;
}

// [f]_+ from the two local expansions: the residue formula
// -(Res_{w=0} + Res_{w=inf}) f(w)/(w-q) dw picks the principal part at 0
// and the non-negative part of the expansion at infinity.
template <typename F>
LaurentPoly<F> laurent_part_residue(const RatFun<F> &f)
{
    LaurentPoly<F> out;
    out.var = f.var();
    if (f.is_zero()) {
        return out;
    }
    for (const auto &[k, c] : local_expansion(f, Center<F>::zero(), -1).coeffs) {
        out.add(k, c);
    }
    const int top = f.num().degree() - f.den().degree();
    if (top >= 0) {
        for (const auto &[k, c] : local_expansion(f, Center<F>::infinity(), 0).coeffs) {
            out.add(-k, c);
        }
    }
    return out;
}

// (Res_0 + Res_inf) of h dq plus the residues at `near_zero` points, which
// are formally small parameters and therefore belong to the expansion at 0.
template <typename F>
F residue_zero_infinity(const RatFun<F> &h, const std::vector<F> &near_zero = {})
{
    F r = residue_at(h, Center<F>::zero()) + residue_at(h, Center<F>::infinity());
    for (const auto &a : near_zero) {
        r += residue_at(h, Center<F>::at(a));
    }
    return r;
}

// Omega(f, g) = (Res_0 + Res_inf) f(1/q) g(q) dq/q.
template <typename F>
F omega_pair(const RatFun<F> &f, const RatFun<F> &g, const std::vector<F> &near_zero = {})
{
    const Var v = g.var() != Var::none ? g.var() : (f.var() != Var::none ? f.var() : Var::q);
    const RatFun<F> h = f.substitute_inverse(v) * g / RatFun<F>::variable(v);
    return residue_zero_infinity(h, near_zero);
}

} // namespace qk1
