#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qk1/errors.hpp"

namespace qk1
{

// Dense univariate polynomial over a field F. Coefficient i multiplies the
// i-th power; trailing zeros are never stored, so the zero polynomial is the
// empty vector and has degree -1.
//
// F must be default constructible to zero, constructible from int, and
// provide the field operators together with a free is_zero(const F&).
template <typename F>
class Poly
{
  public:
    using coeff_type = F;

    Poly() = default;
    Poly(F c)
    {
        if (!is_zero(c)) {
            c_.push_back(std::move(c));
        }
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(F c, int k)
    {
        if (is_zero(c)) {
            return {};
        }
        std::vector<F> v(static_cast<std::size_t>(k) + 1, F(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    // The polynomial u (identity).
    static Poly identity() { return monomial(F(1), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<F> &coeffs() const noexcept { return c_; }

    F coeff(int k) const
    {
        if (k < 0 || k > degree()) {
            return F(0);
        }
        return c_[static_cast<std::size_t>(k)];
    }
    const F &lead() const { return c_.back(); }

    // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!is_zero(c_[i])) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        for (auto &x : a.c_) {
            x = -x;
        }
        return a;
    }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.c_.empty() || b.c_.empty()) {
            return {};
        }
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!is_zero(b.c_[j])) {
                    r[i + j] += a.c_[i] * b.c_[j];
                }
            }
        }
        return Poly(std::move(r));
    }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }

    Poly scaled(const F &s) const
    {
        if (is_zero(s)) {
            return {};
        }
        Poly r = *this;
        for (auto &x : r.c_) {
            x *= s;
        }
        return r;
    }

    // Multiplication by u^k (k >= 0).
    Poly shifted(int k) const
    {
        if (c_.empty() || k == 0) {
            return *this;
        }
        std::vector<F> v(static_cast<std::size_t>(k), F(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    // Euclidean division: returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b)
    {
        if (b.c_.empty()) {
            throw DivisionByZero("polynomial division by zero");
        }
        if (a.degree() < b.degree()) {
            return {Poly{}, a};
        }
        std::vector<F> rem = a.c_;
        std::vector<F> quo(a.c_.size() - b.c_.size() + 1, F(0));
        const F inv_lead = F(1) / b.lead();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            F q = rem[k + db] * inv_lead;
            if (!is_zero(q)) {
                for (std::size_t j = 0; j <= db; ++j) {
                    if (!is_zero(b.c_[j])) {
                        rem[k + j] -= q * b.c_[j];
                    }
                }
            }
            quo[k] = std::move(q);
        }
        rem.resize(db);
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }
    friend Poly operator/(const Poly &a, const Poly &b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly &a, const Poly &b) { return divmod(a, b).second; }

    Poly monic() const
    {
        if (c_.empty()) {
            return {};
        }
        return scaled(F(1) / lead());
    }

    F operator()(const F &x) const
    {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + c_[i];
        }
        return acc;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<F> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            v.push_back(c_[i] * F(static_cast<int>(i)));
        }
        return Poly(std::move(v));
    }

    // p(a + u) as a polynomial in u (repeated synthetic division).
    Poly taylor_shift(const F &a) const
    {
        if (is_zero(a)) {
            return *this;
        }
        std::vector<F> v = c_;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j > i; --j) {
                v[j - 1] += a * v[j];
            }
        }
        return Poly(std::move(v));
    }

    // u^deg * p(1/u).
    Poly reversed() const
    {
        std::vector<F> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }

  private:
    void trim()
    {
        while (!c_.empty() && is_zero(c_.back())) {
            c_.pop_back();
        }
    }

    std::vector<F> c_;
};

template <typename F>
bool is_zero(const Poly<F> &p)
{
    return p.is_zero_poly();
}

// Upper bound for deg gcd(a, b), or -1 when none is known. Coefficient
// fields with a modular image overload this.
template <typename F>
int gcd_degree_bound(const Poly<F> &, const Poly<F> &)
{
    return -1;
}

// Monic gcd; gcd(0, 0) = 0.
template <typename F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    if (!a.is_zero_poly() && !b.is_zero_poly() && a.degree() > 0 && b.degree() > 0) {
        const int bound = gcd_degree_bound(a, b);
        if (bound == 0) {
            return Poly<F>(F(1));
        }
        if (a.degree() < b.degree()) {
            std::swap(a, b);
        }
        if (bound == b.degree() && (a % b).is_zero_poly()) {
            return b.monic();
        }
    }
    while (!b.is_zero_poly()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <typename F>
struct ExtGcd {
    Poly<F> g, s, t;
};

template <typename F>
ExtGcd<F> ext_gcd(const Poly<F> &a, const Poly<F> &b)
{
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0(F(1)), s1;
    Poly<F> t0, t1(F(1));
    while (!r1.is_zero_poly()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) {
        return {r0, s0, t0};
    }
    const F inv = F(1) / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <typename F>
Poly<F> pow(const Poly<F> &p, int k)
{
    Poly<F> r(F(1));
    for (int i = 0; i < k; ++i) {
        r *= p;
    }
    return r;
}

} // namespace qk1
