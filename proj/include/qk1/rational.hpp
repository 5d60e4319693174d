#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "qk1/errors.hpp"

namespace qk1
{

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator (GMP keeps mpq_class canonical after every operation).
class Rational
{
  public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(const mpz_class &n) : v_(n) {}
    Rational(const mpz_class &n, const mpz_class &d)
    {
        if (d == 0) {
            throw DivisionByZero("rational with zero denominator");
        }
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "a", "-a" and "a/b".
    static Rational parse(const std::string &text)
    {
        mpq_class v;
        if (v.set_str(text, 10) != 0) {
            throw Error("malformed rational '" + text + "'");
        }
        if (v.get_den() == 0) {
            throw DivisionByZero("rational with zero denominator");
        }
        v.canonicalize();
        return Rational(std::move(v));
    }

    const mpq_class &value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero("inverse of zero");
        }
        return Rational(mpq_class(1) / v_);
    }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw DivisionByZero("rational division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const { return v_.get_str(); }

  private:
    mpq_class v_{0};
};

inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline std::string to_string(const Rational &r) { return r.to_string(); }

inline Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

inline Rational binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

template <typename F>
class Poly;
int gcd_degree_bound(const Poly<Rational> &a, const Poly<Rational> &b);

} // namespace qk1
