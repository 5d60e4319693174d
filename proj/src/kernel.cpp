#include "qk1/calculus.hpp"
#include "qk1/display.hpp"

#include <set>

namespace qk1
{

std::string_view var_name(Var v)
{
    switch (v) {
    case Var::none:
        return "";
    case Var::q:
        return "q";
    case Var::x:
        return "x";
    case Var::q1:
        return "q1";
    case Var::q2:
        return "q2";
    case Var::L:
        return "L";
    case Var::a:
        return "a";
    case Var::w:
        return "w";
    case Var::u:
        return "u";
    }
    return "?";
}

Var var_from_name(std::string_view name)
{
    for (Var v : {Var::q, Var::x, Var::q1, Var::q2, Var::L, Var::a, Var::w, Var::u}) {
        if (var_name(v) == name) {
            return v;
        }
    }
    return Var::none;
}

namespace detail
{

namespace
{

std::vector<mpz_class> divisors(mpz_class n)
{
    std::vector<mpz_class> out;
    if (n < 0) {
        n = -n;
    }
    if (n == 0 || n > mpz_class("1000000000000")) {
        return out;
    }
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) {
                out.push_back(n / d);
            }
        }
    }
    return out;
}

mpz_class lcm_den(const std::vector<Rational> &v)
{
    mpz_class l = 1;
    for (const auto &c : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return l;
}

mpz_class gcd_num(const std::vector<Rational> &v)
{
    mpz_class g = 0;
    for (const auto &c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
    }
    return g;
}

template <typename B>
std::vector<Rational> flat_coords(const B &c)
{
    if constexpr (std::is_same_v<B, Rational>) {
        return {c};
    } else {
        return c.coords();
    }
}

template <typename B>
int lead_sign(const B &c)
{
    if constexpr (std::is_same_v<B, Rational>) {
        return c.sign();
    } else {
        for (const auto &x : c.coords()) {
            if (!x.is_zero()) {
                return x.sign();
            }
        }
        return 0;
    }
}

template <typename B>
void normalize_impl(MTerms<B> &n, MTerms<B> &d)
{
    std::vector<Rational> all;
    for (const auto *t : {&n, &d}) {
        for (const auto &[e, c] : *t) {
            for (const auto &x : flat_coords(c)) {
                all.push_back(x);
            }
        }
    }
    const Rational l(lcm_den(all));
    std::vector<Rational> scaled;
    for (const auto &x : all) {
        scaled.push_back(x * l);
    }
    Rational s = l / Rational(gcd_num(scaled));
    if (!d.empty() && lead_sign(d.begin()->second) < 0) {
        s = -s;
    }
    for (auto *t : {&n, &d}) {
        for (auto &[e, c] : *t) {
            c = c * B(s);
        }
    }
}

template <typename B>
std::string coeff_term(const B &c, const std::string &mono, bool first)
{
    std::string out;
    bool neg = false;
    std::string mag;
    if constexpr (std::is_same_v<B, Rational>) {
        neg = c.sign() < 0;
        const Rational m = neg ? -c : c;
        mag = mono.empty() ? m.to_string() : (m.is_one() ? mono : m.to_string() + "*" + mono);
    } else {
        if (c.is_rational()) {
            return coeff_term(c.as_rational(), mono, first);
        }
        mag = mono.empty() ? c.to_string() : c.to_string() + "*" + mono;
    }
    if (first) {
        return (neg ? "-" : "") + mag;
    }
    return (neg ? " - " : " + ") + mag;
}

template <typename B>
std::string terms_string(const MTerms<B> &t, const std::vector<Var> &vars)
{
    if (t.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, c] : t) {
        out += coeff_term(c, monomial_string(e, vars), first);
        first = false;
    }
    return out;
}

} // namespace

std::string monomial_string(const std::vector<int> &e, const std::vector<Var> &vars)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += var_name(vars[i]);
        if (e[i] > 1) {
            out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

std::string mterms_string(const MTerms<Rational> &t, const std::vector<Var> &vars) { return terms_string(t, vars); }
std::string mterms_string(const MTerms<Cyc> &t, const std::vector<Var> &vars) { return terms_string(t, vars); }
void normalize_integer(MTerms<Rational> &n, MTerms<Rational> &d) { normalize_impl(n, d); }
void normalize_integer(MTerms<Cyc> &n, MTerms<Cyc> &d) { normalize_impl(n, d); }

std::vector<Rational> rational_root_candidates(const Poly<Rational> &p)
{
    std::vector<Rational> out;
    if (p.degree() < 1) {
        return out;
    }
    const Rational l(lcm_den(p.coeffs()));
    const mpz_class a0 = (p.coeff(0) * l).numerator();
    const mpz_class an = (p.lead() * l).numerator();
    std::set<Rational> seen;
    for (const auto &num : divisors(a0)) {
        for (const auto &den : divisors(an)) {
            for (int s : {1, -1}) {
                const Rational r(s * num, den);
                if (seen.insert(r).second) {
                    out.push_back(r);
                }
            }
        }
    }
    return out;
}

} // namespace detail

} // namespace qk1
