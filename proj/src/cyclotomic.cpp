#include "qk1/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qk1
{

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

int moebius(int n)
{
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            m = -m;
        }
    }
    if (n > 1) {
        m = -m;
    }
    return m;
}

const Poly<Rational> &cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw Error("cyclotomic order must be positive");
    }
    // Immutable memo: entries are never modified once inserted.
    static std::mutex mutex;
    static std::map<int, Poly<Rational>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    // q^n - 1 = prod_{d | n} Phi_d
    Poly<Rational> p = Poly<Rational>::monomial(Rational(1), n) - Poly<Rational>(Rational(1));
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = p / cyclotomic_polynomial(d);
        }
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

namespace
{

Poly<Rational> as_poly(const std::vector<Rational> &v) { return Poly<Rational>(v); }

} // namespace

std::vector<Rational> Cyc::reduce(int order, std::vector<Rational> v)
{
    const auto &phi = cyclotomic_polynomial(order);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    // Phi_N is monic: eliminate from the top.
    for (std::size_t k = v.size(); k-- > deg;) {
        if (v[k].is_zero()) {
            continue;
        }
        const Rational c = v[k];
        for (std::size_t j = 0; j <= deg; ++j) {
            const Rational &pj = phi.coeffs()[j];
            if (!pj.is_zero()) {
                v[k - deg + j] -= c * pj;
            }
        }
    }
    v.resize(deg, Rational(0));
    return v;
}

Cyc::Cyc(const Rational &r) : order_(1), coords_{r} {}

Cyc::Cyc(int order, std::vector<Rational> coords) : order_(order)
{
    if (order < 1) {
        throw Error("cyclotomic order must be positive");
    }
    coords_ = reduce(order, std::move(coords));
}

Cyc Cyc::root_of_unity(long k, int order)
{
    if (order < 1) {
        throw Error("cyclotomic order must be positive");
    }
    long e = k % order;
    if (e < 0) {
        e += order;
    }
    std::vector<Rational> v(static_cast<std::size_t>(e) + 1, Rational(0));
    v.back() = Rational(1);
    return Cyc(order, std::move(v));
}

bool Cyc::is_zero() const
{
    for (const auto &c : coords_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Cyc::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Rational Cyc::as_rational() const
{
    if (!is_rational()) {
        throw NotRational(to_string() + " is not rational");
    }
    return coords_.empty() ? Rational(0) : coords_[0];
}

Cyc Cyc::promoted(int m) const
{
    if (m == order_) {
        return *this;
    }
    if (m % order_ != 0) {
        throw IncompatibleOrder("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(m) + ")");
    }
    const std::size_t step = static_cast<std::size_t>(m / order_);
    std::vector<Rational> v(coords_.empty() ? 1 : (coords_.size() - 1) * step + 1, Rational(0));
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        v[j * step] = coords_[j];
    }
    return Cyc(m, std::move(v));
}

std::pair<Cyc, Cyc> Cyc::common(const Cyc &a, const Cyc &b, bool allow_promotion)
{
    if (a.order_ == b.order_) {
        return {a, b};
    }
    if (!allow_promotion) {
        throw IncompatibleOrder("orders " + std::to_string(a.order_) + " and " + std::to_string(b.order_));
    }
    const int m = std::lcm(a.order_, b.order_);
    return {a.promoted(m), b.promoted(m)};
}

Cyc &Cyc::operator+=(const Cyc &o)
{
    if (order_ != o.order_) {
        auto [a, b] = common(*this, o);
        return *this = a += b;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += o.coords_[i];
    }
    return *this;
}

Cyc &Cyc::operator-=(const Cyc &o)
{
    if (order_ != o.order_) {
        auto [a, b] = common(*this, o);
        return *this = a -= b;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= o.coords_[i];
    }
    return *this;
}

Cyc &Cyc::operator*=(const Cyc &o)
{
    if (order_ != o.order_) {
        // Rational scalars need no promotion.
        if (o.order_ == 1) {
            for (auto &c : coords_) {
                c *= o.coords_[0];
            }
            return *this;
        }
        if (order_ == 1) {
            const Rational s = coords_[0];
            *this = o;
            for (auto &c : coords_) {
                c *= s;
            }
            return *this;
        }
        auto [a, b] = common(*this, o);
        return *this = a *= b;
    }
    if (order_ == 1) {
        coords_[0] *= o.coords_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.coords_.size(); ++j) {
            if (!o.coords_[j].is_zero()) {
                prod[i + j] += coords_[i] * o.coords_[j];
            }
        }
    }
    coords_ = reduce(order_, std::move(prod));
    return *this;
}

Cyc Cyc::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    if (order_ == 1) {
        return Cyc(coords_[0].inverse());
    }
    // s*a + t*Phi = 1 since Phi is irreducible and a != 0.
    auto eg = ext_gcd(as_poly(coords_), cyclotomic_polynomial(order_));
    return Cyc(order_, eg.s.coeffs());
}

bool operator==(const Cyc &a, const Cyc &b)
{
    if (a.order_ == b.order_) {
        return a.coords_ == b.coords_;
    }
    auto [x, y] = Cyc::common(a, b);
    return x.coords_ == y.coords_;
}

std::string Cyc::to_string() const
{
    if (is_rational()) {
        return as_rational().to_string();
    }
    std::ostringstream os;
    os << '(';
    bool first = true;
    const std::string z = "z" + std::to_string(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational &c = coords_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            os << mag.to_string() << '*';
        }
        os << z;
        if (i > 1) {
            os << '^' << i;
        }
    }
    os << ')';
    return os.str();
}

} // namespace qk1
