#include <doctest.h>

#include "qk1/calculus.hpp"
#include "qk1/display.hpp"

using namespace qk1;

namespace
{

using RQ = RatFun<Rational>;
using RC = RatFun<Cyc>;
using RQQ = RatFun<RQ>;

const RQ q = RQ::variable(Var::q);
const RQ one(1);

RQ pow_r(const RQ &b, int k)
{
    RQ r(1);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
        r *= b;
    }
    return k < 0 ? r.inverse() : r;
}

RQ g1_inverted() { return one / (q * (one - pow_r(q, -4)) * (one - pow_r(q, -6))); }

} // namespace

template <typename F>
RatFun<F> group(const PartialFractions<F> &pf, const std::vector<F> &poles)
{
    RatFun<F> r;
    for (const auto &t : pf.terms) {
        if (std::find(poles.begin(), poles.end(), t.pole) != poles.end()) {
            const Poly<F> lin(std::vector<F>{-t.pole, F(1)});
            r += RatFun<F>(pf.var, Poly<F>(t.coeff), pow(lin, t.multiplicity));
        }
    }
    return r;
}

TEST_CASE("rational function arithmetic")
{
    CHECK(one / (one - q) + one / (one + q) == RQ(2) / (one - q * q));
    CHECK((one - pow_r(q, 4)) / (one - q) == one + q + q * q + q * q * q);
    const RQ a = (RQ(9) * q + RQ(7)) / (RQ(32) * pow_r(q + one, 2));
    const RQ b = RQ(9) / (RQ(32) * (q + one)) - one / (RQ(16) * pow_r(q + one, 2));
    CHECK((a - b).is_zero());
    CHECK_THROWS_AS(q / RQ(0), DivisionByZero);
    CHECK_THROWS_AS(q + RQ::variable(Var::x), VariableMismatch);
    CHECK(to_string((one - q).inverse()) == "-1/(q - 1)");
    CHECK(to_string(one / (RQ(24) * pow_r(q - one, 2))) == "1/(24*q^2 - 48*q + 24)");
}

TEST_CASE("substitute_inverse")
{
    const RQ x = RQ::variable(Var::x);
    CHECK(q.substitute_inverse(Var::x) == one / x);
    CHECK((one / (one - pow_r(q, 4))).substitute_inverse(Var::x) == pow_r(x, 4) / (pow_r(x, 4) - one));
    CHECK(g1_inverted().substitute_inverse(Var::x) == x / ((one - pow_r(x, 4)) * (one - pow_r(x, 6))));
    CHECK(g1_inverted() == pow_r(q, 9) / ((one - pow_r(q, 4)) * (one - pow_r(q, 6))));
}

TEST_CASE("local expansions")
{
    const auto e = local_expansion(g1_inverted(), Center<Rational>::at(1), 0);
    CHECK(e.valuation() == -2);
    CHECK(e.coeff(-2) == Rational(1, 24));
    CHECK(e.coeff(-1) == Rational(5, 24));

    const RQ q1 = RQ::variable(Var::q1);
    const RQQ Q = RQQ::variable(Var::q);
    const RQQ f = RQQ(1) / (RQQ(1) - Q * RQQ(q1));
    const auto e2 = local_expansion(f, Center<RQ>::at(RQ(-1)), 1);
    CHECK(e2.coeff(0) == one / (one + q1));
    CHECK(e2.coeff(1) == q1 / pow_r(one + q1, 2));

    const auto inf = local_expansion(q, Center<Rational>::infinity(), 3);
    CHECK(inf.coeffs.size() == 1);
    CHECK(inf.coeff(-1) == Rational(1));
}

TEST_CASE("residues")
{
    CHECK(residue_at(one / (q - one), Center<Rational>::at(1)) == Rational(1));
    CHECK(residue_at(g1_inverted(), Center<Rational>::infinity()) == Rational(-1));
    CHECK(residue_at(g1_inverted(), Center<Rational>::at(1)) == Rational(5, 24));
    CHECK(residue_at(g1_inverted(), Center<Rational>::zero()) == Rational(0));
    CHECK(residue_at(one / q, Center<Rational>::infinity()) == Rational(-1));
}

TEST_CASE("partial fractions")
{
    const RC Q = RC::variable(Var::q);
    const RC o(1);
    auto pw = [](RC b, int k) {
        RC r(1);
        for (int i = 0; i < k; ++i) {
            r *= b;
        }
        return r;
    };
    const RC f = o / ((o + Q) * (o - pw(Q, 3)) * (o - pw(Q, 4)));
    const auto pf = partial_fractions(f);
    CHECK(pf.recombine() == f);
    const Cyc i = Cyc::root_of_unity(1, 4);
    const Cyc w = Cyc::root_of_unity(1, 3);
    CHECK(group(pf, {Cyc(-1)}) == (RC(3) * Q + RC(4)) / (RC(8) * pw(Q + o, 2)));
    CHECK(group(pf, {i, -i}) == -Q / (RC(4) * (pw(Q, 2) + o)));
    CHECK(group(pf, {w, w * w}) == o / (RC(3) * (pw(Q, 2) + Q + o)));
    CHECK(group(pf, {Cyc(1)}) == o / (RC(24) * pw(o - Q, 2)) + o / (RC(8) * (o - Q)));

    const auto pf2 = partial_fractions((Q - o) / (RC(8) * (pw(Q, 2) + o)));
    REQUIRE(pf2.terms.size() == 2);
    for (const auto &t : pf2.terms) {
        CHECK(t.multiplicity == 1);
        CHECK(t.coeff == (t.pole == i ? (Cyc(1) + i) : (Cyc(1) - i)) / Cyc(16));
    }

    const auto pf3 = partial_fractions(one / (q - RQ(2)));
    REQUIRE(pf3.terms.size() == 1);
    CHECK(pf3.terms[0].pole == Rational(2));
    CHECK(pf3.terms[0].coeff == Rational(1));

    CHECK_THROWS_AS(partial_fractions(one / (q * q - RQ(2))), IrreducibleDenominator);
}

TEST_CASE("laurent part")
{
    const RQ lp = RQ(3) / q + q * q - RQ(5) / (q * q * q);
    CHECK(laurent_part(lp).to_ratfun() == lp);
    CHECK(laurent_part_residue(lp).to_ratfun() == lp);

    const RQ f = one / (q * (q - RQ(2)));
    CHECK(laurent_part(f).to_ratfun() == RQ(Rational(-1, 2)) / q);
    CHECK(laurent_part_residue(f).to_ratfun() == RQ(Rational(-1, 2)) / q);

    // -(Res_{w=0} + Res_{w=inf}) f(w)/(w-q) dw, literally, with q in the coefficients
    const RQQ W = RQQ::variable(Var::w);
    const RQQ Fw = RQQ(1) / (W * (W - RQQ(2))) / (W - RQQ(q));
    const RQ lit = -(residue_at(Fw, Center<RQ>::zero()) + residue_at(Fw, Center<RQ>::infinity()));
    CHECK(lit == RQ(Rational(-1, 2)) / q);

    // [(1-q)/(1-L/q)]_+ = 1 - q - L
    const RQ L = RQ::variable(Var::L);
    const RQQ Q = RQQ::variable(Var::q);
    const RQQ g = (RQQ(1) - Q) / (RQQ(1) - RQQ(L) / Q);
    const RQQ expected = RQQ(1) - Q - RQQ(L);
    CHECK(laurent_part(g).to_ratfun() == expected);
    CHECK(laurent_part_residue(g).to_ratfun() == expected);
    const auto pf = partial_fractions(g, 12, {L});
    REQUIRE(pf.terms.size() == 1);
    CHECK(pf.terms[0].pole == L);
    CHECK(RQQ(Var::q, pf.polynomial) == expected);
    CHECK(g - principal_part(g, L) == expected);
}

TEST_CASE("omega pairing")
{
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            CHECK(omega_pair(pow_r(q, a), pow_r(q, b)) == Rational(0));
        }
    }
    CHECK(omega_pair(one, one / (one - q)) == Rational(1));
    CHECK(omega_pair(one / (one - q), one) == Rational(-1));
}
