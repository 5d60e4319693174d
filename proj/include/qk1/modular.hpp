#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qk1/cyclotomic.hpp"

namespace qk1
{

// Arithmetic modulo a fixed word-size prime p with p - 1 divisible by
// lcm(1..16), so Q(zeta_N) maps into F_p for every N dividing it.
namespace modp
{

using u64 = std::uint64_t;

u64 prime();
u64 add(u64 a, u64 b);
u64 sub(u64 a, u64 b);
u64 mul(u64 a, u64 b);
u64 power(u64 a, u64 e);
u64 inv(u64 a);
u64 random_element();

std::optional<u64> image(const Rational &c);
std::optional<u64> image(const Cyc &c);

// Degree of the gcd of two dense polynomials over F_p (nonzero leads).
int gcd_degree(std::vector<u64> a, std::vector<u64> b);

// One evaluation point per tower level, outermost first.
using Point = std::array<u64, 8>;

template <typename F>
struct Imager;

template <>
struct Imager<Rational> {
    static std::optional<u64> apply(const Rational &c, const u64 *) { return image(c); }
};
template <>
struct Imager<Cyc> {
    static std::optional<u64> apply(const Cyc &c, const u64 *) { return image(c); }
};

template <typename F>
std::optional<std::vector<u64>> image_poly(const Poly<F> &p, const u64 *pt)
{
    std::vector<u64> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        const auto v = Imager<F>::apply(c, pt);
        if (!v) {
            return std::nullopt;
        }
        out.push_back(*v);
    }
    return out;
}

// Specializing all coefficients at a point of F_p can only raise the gcd
// degree, as long as the leading coefficients survive.
template <typename F>
int degree_bound(const Poly<F> &a, const Poly<F> &b)
{
    for (int attempt = 0; attempt < 3; ++attempt) {
        Point pt{};
        for (auto &v : pt) {
            v = random_element();
        }
        const auto ia = image_poly(a, pt.data());
        if (!ia || ia->empty() || ia->back() == 0 || ia->size() != a.coeffs().size()) {
            continue;
        }
        const auto ib = image_poly(b, pt.data());
        if (!ib || ib->empty() || ib->back() == 0 || ib->size() != b.coeffs().size()) {
            continue;
        }
        return gcd_degree(*ia, *ib);
    }
    return -1;
}

} // namespace modp

} // namespace qk1
