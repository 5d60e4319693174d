#include "qk1/modular.hpp"

#include <map>
#include <mutex>
#include <random>

namespace qk1
{

namespace modp
{

namespace
{

constexpr u64 kStep = 720720; // lcm(1..16)

u64 find_prime()
{
    mpz_class k = (mpz_class(1) << 61) / kStep;
    for (;; ++k) {
        const mpz_class p = k * kStep + 1;
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) > 0) {
            return p.get_ui();
        }
    }
}

u64 reduce(const mpz_class &z)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), prime());
    return r.get_ui();
}

std::vector<int> prime_factors(int n)
{
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// A primitive N-th root of unity in F_p, or 0 when N does not divide p - 1.
u64 primitive_root(int n)
{
    static std::mutex mu;
    static std::map<int, u64> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    u64 w = 0;
    const u64 p = prime();
    if ((p - 1) % static_cast<u64>(n) == 0) {
        const auto factors = prime_factors(n);
        for (u64 a = 2; w == 0; ++a) {
            const u64 c = power(a, (p - 1) / static_cast<u64>(n));
            bool ok = true;
            for (int r : factors) {
                ok = ok && power(c, static_cast<u64>(n / r)) != 1;
            }
            if (ok) {
                w = c;
            }
        }
    }
    cache.emplace(n, w);
    return w;
}

void trim(std::vector<u64> &v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

} // namespace

u64 prime()
{
    static const u64 p = find_prime();
    return p;
}

u64 add(u64 a, u64 b)
{
    const u64 s = a + b;
    return s >= prime() ? s - prime() : s;
}

u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + prime() - b; }

u64 mul(u64 a, u64 b)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % prime());
}

u64 power(u64 a, u64 e)
{
    u64 r = 1;
    while (e > 0) {
        if (e & 1) {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a) { return power(a, prime() - 2); }

u64 random_element()
{
    thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    return std::uniform_int_distribution<u64>(1, prime() - 1)(rng);
}

std::optional<u64> image(const Rational &c)
{
    const u64 d = reduce(c.denominator());
    if (d == 0) {
        return std::nullopt;
    }
    return mul(reduce(c.numerator()), inv(d));
}

std::optional<u64> image(const Cyc &c)
{
    const u64 w = c.order() == 1 ? 1 : primitive_root(c.order());
    if (w == 0) {
        return std::nullopt;
    }
    u64 acc = 0;
    u64 wp = 1;
    for (const auto &x : c.coords()) {
        const auto v = image(x);
        if (!v) {
            return std::nullopt;
        }
        acc = add(acc, mul(*v, wp));
        wp = mul(wp, w);
    }
    return acc;
}

int gcd_degree(std::vector<u64> a, std::vector<u64> b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        const u64 li = inv(b.back());
        while (a.size() >= b.size()) {
            const u64 f = mul(a.back(), li);
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[off + i] = sub(a[off + i], mul(f, b[i]));
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

} // namespace modp

int gcd_degree_bound(const Poly<Rational> &a, const Poly<Rational> &b) { return modp::degree_bound(a, b); }

int gcd_degree_bound(const Poly<Cyc> &a, const Poly<Cyc> &b) { return modp::degree_bound(a, b); }

} // namespace qk1
