#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qk1/ratfun.hpp"

namespace qk1
{

// Canonical strings. A rational function over a tower is flattened to
// N/D with N, D integer polynomials in all tower variables (outermost
// first), no common integer content, and D's leading term positive. Terms
// print in decreasing lexicographic degree.

template <typename B>
using MTerms = std::map<std::vector<int>, B, std::greater<>>;

namespace detail
{

std::string monomial_string(const std::vector<int> &e, const std::vector<Var> &vars);
std::string mterms_string(const MTerms<Rational> &t, const std::vector<Var> &vars);
std::string mterms_string(const MTerms<Cyc> &t, const std::vector<Var> &vars);
void normalize_integer(MTerms<Rational> &n, MTerms<Rational> &d);
void normalize_integer(MTerms<Cyc> &n, MTerms<Cyc> &d);

template <typename G>
struct Flattener {
    static void run(MTerms<G> &n, MTerms<G> &d, std::vector<Var> &, MTerms<G> &on, MTerms<G> &od)
    {
        normalize_integer(n, d);
        on = std::move(n);
        od = std::move(d);
    }
};

template <typename H>
struct Flattener<RatFun<H>> {
    using B = typename FieldTraits<H>::base_type;
    static void run(MTerms<RatFun<H>> &n, MTerms<RatFun<H>> &d, std::vector<Var> &vars, MTerms<B> &on,
                    MTerms<B> &od)
    {
        Poly<H> l(H(1));
        Var v = Var::none;
        auto scan = [&](const MTerms<RatFun<H>> &t) {
            for (const auto &[e, c] : t) {
                if (c.var() != Var::none) {
                    v = c.var();
                }
                l = l / gcd(l, c.den()) * c.den();
            }
        };
        scan(n);
        scan(d);
        vars.push_back(v);
        auto expand = [&](const MTerms<RatFun<H>> &t) {
            MTerms<H> r;
            for (const auto &[e, c] : t) {
                const Poly<H> p = c.num() * (l / c.den());
                for (int j = 0; j <= p.degree(); ++j) {
                    if (!is_zero(p.coeff(j))) {
                        auto k = e;
                        k.push_back(j);
                        r.emplace(std::move(k), p.coeff(j));
                    }
                }
            }
            return r;
        };
        MTerms<H> n2 = expand(n);
        MTerms<H> d2 = expand(d);
        Flattener<H>::run(n2, d2, vars, on, od);
    }
};

} // namespace detail


template <typename F>
std::string to_string(const RatFun<F> &f)
{
    using B = typename FieldTraits<RatFun<F>>::base_type;
    MTerms<F> n, d;
    for (int i = 0; i <= f.num().degree(); ++i) {
        if (!is_zero(f.num().coeff(i))) {
            n.emplace(std::vector<int>{i}, f.num().coeff(i));
        }
    }
    for (int i = 0; i <= f.den().degree(); ++i) {
        if (!is_zero(f.den().coeff(i))) {
            d.emplace(std::vector<int>{i}, f.den().coeff(i));
        }
    }
    std::vector<Var> vars{f.var()};
    MTerms<B> on, od;
    detail::Flattener<F>::run(n, d, vars, on, od);
    if (on.empty()) {
        return "0";
    }
    const std::string ns = detail::mterms_string(on, vars);
    const bool unit_den = od.size() == 1 && std::all_of(od.begin()->first.begin(), od.begin()->first.end(),
                                                        [](int k) { return k == 0; }) &&
                          od.begin()->second == B(1);
    if (unit_den) {
        return ns;
    }
    const std::string ds = detail::mterms_string(od, vars);
    const auto &de = od.begin()->first;
    const auto nvars = std::count_if(de.begin(), de.end(), [](int k) { return k != 0; });
    const bool single_factor = od.size() == 1 && (nvars == 0 || (nvars == 1 && od.begin()->second == B(1)));
    const bool bare_num = on.size() == 1 && ns.find('*') == std::string::npos && ns.find('/') == std::string::npos;
    return (bare_num ? ns : "(" + ns + ")") + "/" + (single_factor ? ds : "(" + ds + ")");
}

} // namespace qk1
