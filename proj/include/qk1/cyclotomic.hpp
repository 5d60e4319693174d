#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qk1/poly.hpp"
#include "qk1/rational.hpp"

namespace qk1
{

int euler_phi(int n);
int moebius(int n);

// The n-th cyclotomic polynomial over Q.
const Poly<Rational> &cyclotomic_polynomial(int n);

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// zeta^0 .. zeta^{phi(N)-1} modulo Phi_N. Rationals live at order 1 and are
// promoted on contact; mixed orders meet in Q(zeta_lcm).
class Cyc
{
  public:
    Cyc() : Cyc(Rational(0)) {}
    Cyc(int v) : Cyc(Rational(v)) {}
    Cyc(const Rational &r);
    Cyc(int order, std::vector<Rational> coords);

    static Cyc root_of_unity(long k, int order);

    int order() const noexcept { return order_; }
    const std::vector<Rational> &coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const;

    // Representation of this value in Q(zeta_m); m must be a multiple of order().
    Cyc promoted(int m) const;

    // Both operands in a common field. Throws IncompatibleOrder when the
    // orders differ and promotion is not allowed.
    static std::pair<Cyc, Cyc> common(const Cyc &a, const Cyc &b, bool allow_promotion = true);

    Cyc inverse() const;

    Cyc &operator+=(const Cyc &o);
    Cyc &operator-=(const Cyc &o);
    Cyc &operator*=(const Cyc &o);
    Cyc &operator/=(const Cyc &o) { return *this *= o.inverse(); }

    friend Cyc operator+(Cyc a, const Cyc &b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc &b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc &b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc &b) { return a /= b; }
    friend Cyc operator-(Cyc a)
    {
        for (auto &c : a.coords_) {
            c = -c;
        }
        return a;
    }

    friend bool operator==(const Cyc &a, const Cyc &b);

    // Rational values print as rationals; otherwise "(c0 + c1*z12 + ...)".
    std::string to_string() const;

  private:
    // Reduce an arbitrary-length coefficient vector modulo Phi_order.
    static std::vector<Rational> reduce(int order, std::vector<Rational> v);

    int order_ = 1;
    std::vector<Rational> coords_;
};

inline bool is_zero(const Cyc &c) { return c.is_zero(); }
inline std::string to_string(const Cyc &c) { return c.to_string(); }
inline Rational as_rational(const Cyc &c) { return c.as_rational(); }

int gcd_degree_bound(const Poly<Cyc> &a, const Poly<Cyc> &b);

} // namespace qk1
