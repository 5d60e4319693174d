#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "qk1/cyclotomic.hpp"
#include "qk1/modular.hpp"
#include "qk1/poly.hpp"
#include "qk1/rational.hpp"

namespace qk1
{

// Names of the univariate variables that occur in the library. The enum keeps
// rational-function values cheap to copy; `none` marks a constant.
enum class Var : std::uint8_t { none, q, x, q1, q2, L, a, w, u };

std::string_view var_name(Var v);
Var var_from_name(std::string_view name); // Var::none when unknown

// Normalized quotient num/den of polynomials in one variable over a field F:
// gcd(num, den) = 1 and den is monic. Constants carry Var::none so that they
// combine with rational functions in any variable.
template <typename F>
class RatFun;
template <typename F>
bool is_zero(const RatFun<F> &f);
template <typename G>
int gcd_degree_bound(const Poly<RatFun<G>> &a, const Poly<RatFun<G>> &b);

template <typename F>
class RatFun
{
  public:
    using coeff_type = F;

    RatFun() : den_(F(1)) {}

    template <typename T>
        requires(!std::same_as<std::remove_cvref_t<T>, RatFun> && std::constructible_from<F, const T &>)
    RatFun(const T &c) : num_(F(c)), den_(F(1))
    {
    }

    RatFun(Var v, Poly<F> num, Poly<F> den = Poly<F>(F(1))) : var_(v), num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    // num and den already coprime; only the denominator is made monic.
    struct Coprime {};
    RatFun(Var v, Poly<F> num, Poly<F> den, Coprime) : var_(v), num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero_poly()) {
            throw DivisionByZero("rational function with zero denominator");
        }
        make_monic();
    }

    static RatFun variable(Var v) { return RatFun(v, Poly<F>::identity()); }

    Var var() const noexcept { return var_; }
    const Poly<F> &num() const noexcept { return num_; }
    const Poly<F> &den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero_poly(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    F constant_value() const { return num_.coeff(0); }

    // Rename the variable (no substitution of values).
    RatFun with_var(Var v) const
    {
        RatFun r = *this;
        if (!r.is_constant()) {
            r.var_ = v;
        }
        return r;
    }

    RatFun inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero("inverse of the zero rational function");
        }
        return RatFun(var_, den_, num_);
    }

    RatFun &operator+=(const RatFun &o)
    {
        const Var v = join(o);
        if (o.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            return *this = o;
        }
        var_ = v;
        if (den_ == o.den_) {
            num_ += o.num_;
            normalize();
            return *this;
        }
        // Henrici: with g = gcd(b, d), only g can share factors with the new numerator.
        const Poly<F> g = gcd(den_, o.den_);
        if (g.degree() == 0) {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
            make_monic();
            return *this;
        }
        const Poly<F> b = den_ / g;
        const Poly<F> d = o.den_ / g;
        num_ = num_ * d + o.num_ * b;
        den_ = b * o.den_;
        if (num_.is_zero_poly()) {
            den_ = Poly<F>(F(1));
            return *this;
        }
        const Poly<F> g2 = gcd(num_, g);
        if (g2.degree() > 0) {
            num_ = num_ / g2;
            den_ = den_ / g2;
        }
        make_monic();
        return *this;
    }
    RatFun &operator-=(const RatFun &o) { return *this += -o; }

    RatFun &operator*=(const RatFun &o)
    {
        const Var v = join(o);
        if (is_zero() || o.is_zero()) {
            return *this = RatFun();
        }
        if (o.is_constant()) {
            num_ = num_.scaled(o.constant_value());
            return *this;
        }
        if (is_constant()) {
            const F c = constant_value();
            *this = o;
            num_ = num_.scaled(c);
            return *this;
        }
        const Poly<F> g1 = gcd(num_, o.den_);
        const Poly<F> g2 = gcd(o.num_, den_);
        num_ = (num_ / g1) * (o.num_ / g2);
        den_ = (den_ / g2) * (o.den_ / g1);
        var_ = v;
        make_monic();
        return *this;
    }
    RatFun &operator/=(const RatFun &o) { return *this *= o.inverse(); }

    friend RatFun operator+(RatFun a, const RatFun &b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun &b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun &b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun &b) { return a /= b; }
    friend RatFun operator-(RatFun a)
    {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const RatFun &a, const RatFun &b)
    {
        return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Value at a point of the coefficient field; throws at a pole.
    F operator()(const F &at) const
    {
        const F d = den_(at);
        if (qk1::is_zero(d)) {
            throw DivisionByZero("evaluation at a pole");
        }
        return num_(at) / d;
    }

    // Composition f(r).
    RatFun compose(const RatFun &r) const
    {
        return horner(num_, r) / horner(den_, r);
    }

    // f(1/y) as a rational function in y.
    RatFun substitute_inverse(Var y) const
    {
        if (is_constant()) {
            return *this;
        }
        const int shift = den_.degree() - num_.degree();
        Poly<F> n = num_.reversed();
        Poly<F> d = den_.reversed();
        if (shift >= 0) {
            n = n.shifted(shift);
        } else {
            d = d.shifted(-shift);
        }
        return RatFun(y, std::move(n), std::move(d), Coprime{});
    }

    RatFun derivative() const
    {
        if (is_constant()) {
            return RatFun();
        }
        return RatFun(var_, num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

  private:
    static RatFun horner(const Poly<F> &p, const RatFun &r)
    {
        RatFun acc;
        const auto &c = p.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) {
            acc = acc * r + RatFun(c[i]);
        }
        return acc;
    }

    Var join(const RatFun &o) const
    {
        if (var_ == Var::none) {
            return o.var_;
        }
        if (o.var_ == Var::none || o.var_ == var_) {
            return var_;
        }
        throw VariableMismatch(std::string(var_name(var_)) + " vs " + std::string(var_name(o.var_)));
    }

    void make_monic()
    {
        if (num_.is_zero_poly()) {
            den_ = Poly<F>(F(1));
        } else if (!(den_.lead() == F(1))) {
            const F inv = F(1) / den_.lead();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
        if (num_.is_constant() && den_.is_constant()) {
            var_ = Var::none;
        }
    }

    void normalize()
    {
        if (den_.is_zero_poly()) {
            throw DivisionByZero("rational function with zero denominator");
        }
        if (!den_.is_constant() && !num_.is_zero_poly()) {
            const Poly<F> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        make_monic();
    }

    Var var_ = Var::none;
    Poly<F> num_;
    Poly<F> den_;
};

template <typename F>
bool is_zero(const RatFun<F> &f)
{
    return f.is_zero();
}

// ---------------------------------------------------------------------------
// Field traits over the coefficient towers built from Rational and Cyc.

template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    using base_type = Rational;
    static constexpr int depth = 0;
    static constexpr bool has_roots_of_unity = false;
    static Rational root_of_unity(long k, int order)
    {
        const long e = ((k % order) + order) % order;
        if (e == 0) {
            return Rational(1);
        }
        if (2 * e == order) {
            return Rational(-1);
        }
        throw IncompatibleOrder("root of unity of order > 2 is not rational");
    }
};

template <>
struct FieldTraits<Cyc> {
    using base_type = Cyc;
    static constexpr int depth = 0;
    static constexpr bool has_roots_of_unity = true;
    static Cyc root_of_unity(long k, int order) { return Cyc::root_of_unity(k, order); }
};

template <typename G>
struct FieldTraits<RatFun<G>> {
    using base_type = typename FieldTraits<G>::base_type;
    static constexpr int depth = FieldTraits<G>::depth + 1;
    static constexpr bool has_roots_of_unity = FieldTraits<G>::has_roots_of_unity;
    static RatFun<G> root_of_unity(long k, int order) { return RatFun<G>(FieldTraits<G>::root_of_unity(k, order)); }
};

template <typename F>
F root_of_unity(long k, int order)
{
    return FieldTraits<F>::root_of_unity(k, order);
}

// Coefficient-wise conversion between towers with the same shape, e.g.
// Q(q2)(q1) -> Q(zeta)(q2)(q1) or back (the latter throws NotRational when a
// coefficient is not rational).
template <typename To, typename From>
struct Converter;

template <typename T>
struct Converter<T, T> {
    static T apply(const T &v) { return v; }
};
template <>
struct Converter<Cyc, Rational> {
    static Cyc apply(const Rational &v) { return Cyc(v); }
};
template <>
struct Converter<Rational, Cyc> {
    static Rational apply(const Cyc &v) { return v.as_rational(); }
};
template <typename G, typename H>
    requires(!std::same_as<G, H>)
struct Converter<RatFun<G>, RatFun<H>> {
    static RatFun<G> apply(const RatFun<H> &f)
    {
        auto map = [](const Poly<H> &p) {
            std::vector<G> v;
            v.reserve(p.coeffs().size());
            for (const auto &c : p.coeffs()) {
                v.push_back(Converter<G, H>::apply(c));
            }
            return Poly<G>(std::move(v));
        };
        return RatFun<G>(f.var(), map(f.num()), map(f.den()));
    }
};

template <typename To, typename From>
To convert(const From &v)
{
    return Converter<To, From>::apply(v);
}

namespace modp
{

template <typename G>
struct Imager<RatFun<G>> {
    static std::optional<u64> apply(const RatFun<G> &f, const u64 *pt)
    {
        auto horner = [&](const Poly<G> &p) -> std::optional<u64> {
            u64 acc = 0;
            const auto &c = p.coeffs();
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
                const auto v = Imager<G>::apply(*it, pt + 1);
                if (!v) {
                    return std::nullopt;
                }
                acc = add(mul(acc, pt[0]), *v);
            }
            return acc;
        };
        const auto d = horner(f.den());
        if (!d || *d == 0) {
            return std::nullopt;
        }
        const auto n = horner(f.num());
        if (!n) {
            return std::nullopt;
        }
        return mul(*n, inv(*d));
    }
};

} // namespace modp

template <typename G>
int gcd_degree_bound(const Poly<RatFun<G>> &a, const Poly<RatFun<G>> &b)
{
    return modp::degree_bound(a, b);
}

template <typename F>
struct CycOfT {
    using type = Cyc;
};
template <typename G>
struct CycOfT<RatFun<G>> {
    using type = RatFun<typename CycOfT<G>::type>;
};
// The same tower with Q(zeta_N) at the bottom.
template <typename F>
using CycOf = typename CycOfT<F>::type;

// Coefficientwise image of a function over Q in any tower over Q.
template <typename F>
RatFun<F> embed(const RatFun<Rational> &f)
{
    auto map = [](const Poly<Rational> &p) {
        std::vector<F> v;
        v.reserve(p.coeffs().size());
        for (const auto &c : p.coeffs()) {
            v.push_back(F(c));
        }
        return Poly<F>(std::move(v));
    };
    return RatFun<F>(f.var(), map(f.num()), map(f.den()));
}

using RQ = RatFun<Rational>;
using RQQ = RatFun<RQ>;
using RQQQ = RatFun<RQQ>;
using RC = RatFun<Cyc>;
using RCC = RatFun<RC>;
using RCCC = RatFun<RCC>;

} // namespace qk1
