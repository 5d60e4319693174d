#include "qk1/genus1.hpp"

#include <mutex>

#include "qk1/expr.hpp"

namespace qk1
{

std::string_view convention_name(Convention c)
{
    return c == Convention::monomial ? "monomial" : "divided-power";
}

Convention convention_from_name(std::string_view name)
{
    if (name == "monomial") {
        return Convention::monomial;
    }
    if (name == "divided-power" || name == "divided_power") {
        return Convention::divided_power;
    }
    throw Error("unknown convention '" + std::string(name) + "'");
}

const char *const kOnePointText = "1/((1-q^4)*(1-q^6))";
const char *const kTwoPointUnitText = "1/((1-q^2)*(1-q^3)*(1-q^4))";
const char *const kLeeQuText =
    "1/((1-q1)*(1-q2^2)*(1-q2^3)*(1-q2^4)) + 1/((1-q2)*(1-q1^2)*(1-q1^3)*(1-q1^4)) - 1/((1-q1)*(1-q2))"
    " + 1/24*q1*q2/((1-q1)^2*(1-q2)^2)"
    " + 1/8*q1*q2/((1-q1^2)*(1-q2^2))*(11 - 2*q1/(1+q1) - 2*q2/(1+q2))"
    " + 1/4*q1*q2/((1-q1)*(1-q2))*(1+(q1+q2)-q1*q2)/((1+q1^2)*(1+q2^2))"
    " + 1/3*q1*q2/((1-q1)*(1-q2))*(1+2*(q1+q2)+q1*q2)/((1+q1+q1^2)*(1+q2+q2^2))";

const std::vector<std::string> &hodge_atom_texts()
{
    static const std::vector<std::string> atoms{
        "(5*q-6)/(24*(q-1)^2*(x-1))",
        "(5*q+6)/(24*(q+1)^2*(x+1))",
        "1/(24*(q-1)*(x-1)^2)",
        "-1/(24*(q+1)*(x+1)^2)",
        "(q*x+1)/(4*(q^2+1)*(x^2+1))",
        "(q*x-q+1)/(6*(q^2-q+1)*(x^2-x+1))",
        "(q*x+q+1)/(6*(q^2+q+1)*(x^2+x+1))",
    };
    return atoms;
}

namespace
{

RC root(int k) { return RC(Cyc::root_of_unity(k, 12)); }

RC qc() { return RC::variable(Var::q); }

RatFun<RC> xc() { return RatFun<RC>::variable(Var::x); }

// sum_{zeta=+-1} (5 - 4 zeta x)/(24 (1 - zeta x)^2) + sum_{zeta=+-i} 1/(4(1-zeta^2)(1-zeta x))
//   + sum_{zeta=omega^{+-1,+-2}} 1/(6(1-zeta^2)(1-zeta x))
RC one_point_fractions()
{
    using X = RC;
    const X x = RC::variable(Var::x);
    X acc;
    for (int k : {0, 6}) {
        const X z = root(k);
        acc += (X(5) - X(4) * z * x) / (X(24) * (X(1) - z * x) * (X(1) - z * x));
    }
    for (int k : {3, 9}) {
        const X z = root(k);
        acc += X(1) / (X(4) * (X(1) - z * z) * (X(1) - z * x));
    }
    for (int k : {2, 10, 4, 8}) {
        const X z = root(k);
        acc += X(1) / (X(6) * (X(1) - z * z) * (X(1) - z * x));
    }
    return acc;
}

TSeries<RC>::Names tau_names()
{
    static const auto names = TSeries<RC>::make_names({"tau"});
    return names;
}

TSeries<RQ>::Names tau_names_q()
{
    static const auto names = TSeries<RQ>::make_names({"tau"});
    return names;
}

// exp(beta tau) to order m.
TSeries<RC> exp_tau(const RC &beta, int m)
{
    TSeries<RC> s(tau_names(), m);
    RC c(1);
    for (int k = 0; k <= m; ++k) {
        s.add(Monomial{k}, c);
        c = c * beta / RC(k + 1);
    }
    return s;
}

TSeries<RC> tau_poly(const RC &c0, const RC &c1, int m)
{
    TSeries<RC> s(tau_names(), m);
    s.add(Monomial{0}, c0);
    s.add(Monomial{1}, c1);
    return s;
}

TauSeries to_rational(const TSeries<RC> &s)
{
    TauSeries out(tau_names_q(), s.cutoff());
    for (const auto &[mono, c] : s.terms()) {
        out.add(mono, convert<RQ>(c));
    }
    return out;
}

RC prefactor_exponent() { return RC(1) / (RC(1) - qc()); }

} // namespace

void verify_table(const CorrelatorTable &table)
{
    if (!(table.one_point == parse_ratfun(kOnePointText)) ||
        !(table.two_point_unit == parse_ratfun(kTwoPointUnitText))) {
        throw Error("correlator table differs from its stored closed form");
    }
    if (!(convert<RQ>(one_point_fractions()).with_var(Var::q) == table.one_point)) {
        throw Error("one-point correlator differs from its partial-fraction form");
    }
    // (1 - q) <1/(1-qL), 1>_{1,2} in partial fractions
    {
        const RQ q = RQ::variable(Var::q);
        const RQ pf = (RQ(3) * q + RQ(4)) / (RQ(8) * (q + RQ(1)) * (q + RQ(1))) - q / (RQ(4) * (q * q + RQ(1))) +
                      RQ(1) / (RQ(3) * (q * q + q + RQ(1))) + RQ(1) / (RQ(24) * (RQ(1) - q) * (RQ(1) - q)) +
                      RQ(1) / (RQ(8) * (RQ(1) - q));
        if (!(pf == (RQ(1) - q) * table.two_point_unit)) {
            throw Error("two-point correlator differs from its partial-fraction form");
        }
    }
    RCC sum;
    for (const auto &text : hodge_atom_texts()) {
        sum += convert<RCC>(parse_bivariate(text, Var::x, Var::q));
    }
    if (!(sum == table.hodge_mixed) || !(partial_fractions(table.hodge_mixed).recombine() == table.hodge_mixed)) {
        throw Error("Hodge table does not recombine from its atoms");
    }
    // 1/(1 - x H*) is 1 at x = 0
    if (!(convert<RQ>(table.hodge_mixed(RC(0))) == table.one_point)) {
        throw Error("Hodge table at x = 0 differs from the one-point correlator");
    }
}

const CorrelatorTable &CorrelatorTable::standard()
{
    static const CorrelatorTable table = [] {
        CorrelatorTable t;
        t.one_point = parse_ratfun(kOnePointText);
        t.two_point_unit = parse_ratfun(kTwoPointUnitText);
        for (const auto &text : hodge_atom_texts()) {
            t.hodge_mixed += convert<RCC>(parse_bivariate(text, Var::x, Var::q));
        }
        verify_table(t);
        return t;
    }();
    return table;
}

RQQ leequ_reference()
{
    static const RQQ value = parse_bivariate(kLeeQuText, Var::q1, Var::q2);
    return value;
}

std::vector<RQ> leequ_first_order(int count)
{
    using A = RatFun<RQ>;
    const A a = A::variable(Var::a);
    const A q2 = a / (A(1) + a);
    const ExprPtr e = parse_expr(kLeeQuText);
    const A lq = evaluate<A>(e, [&](Var v) {
        if (v == Var::q1) {
            return A(RQ::variable(Var::q));
        }
        if (v == Var::q2) {
            return q2;
        }
        throw VariableMismatch("unexpected variable in the two-point form");
    });
    const auto ex = local_expansion(lq * (A(1) - q2), Center<RQ>::zero(), count - 1);
    std::vector<RQ> out;
    for (int n = 0; n < count; ++n) {
        out.push_back(ex.coeff(n));
    }
    return out;
}

RQQ swapped(const RQQ &f)
{
    const RQQ y = RQQ(RQ::variable(Var::q2));
    auto swap_poly = [&](const Poly<RQ> &p) {
        RQQ acc;
        RQQ power(1);
        for (const auto &c : p.coeffs()) {
            acc += embed<RQ>(c.with_var(Var::q1)) * power;
            power = power * y;
        }
        return acc;
    };
    return swap_poly(f.num()) / swap_poly(f.den());
}

RQ coordinate_weight(int n, Var v, Convention conv)
{
    const RQ q = RQ::variable(v);
    RQ w = RQ(1) / (RQ(1) - q);
    for (int i = 0; i < n; ++i) {
        w = w * q / (RQ(1) - q);
    }
    if (conv == Convention::divided_power) {
        w = w * RQ(factorial(n));
    }
    return w;
}

RQQ extract_two_point(const TSeries<Rational> &f, Convention conv)
{
    auto w1 = [&](int n) { return embed<RQ>(coordinate_weight(n, Var::q1, conv)); };
    auto w2 = [&](int n) { return RQQ(coordinate_weight(n, Var::q2, conv)); };
    RQQ acc;
    for (const auto &[m, c] : f.terms()) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (int k = 0; k < m[i]; ++k) {
                idx.push_back(static_cast<int>(i));
            }
        }
        if (idx.size() != 2) {
            continue;
        }
        const RQQ cc{RQ(c)};
        if (idx[0] == idx[1]) {
            acc += RQQ(2) * cc * w1(idx[0]) * w2(idx[0]);
        } else {
            acc += cc * (w1(idx[0]) * w2(idx[1]) + w1(idx[1]) * w2(idx[0]));
        }
    }
    return acc;
}

std::vector<std::vector<Rational>> taylor_grid(const RQQ &f, int n)
{
    std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(n), std::vector<Rational>(n, Rational(0)));
    const auto outer = local_expansion(f, Center<RQ>::zero(), n - 1);
    for (int i = 0; i < n; ++i) {
        const auto inner = local_expansion(outer.coeff(i), Center<Rational>::zero(), n - 1);
        for (int j = 0; j < n; ++j) {
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = inner.coeff(j);
        }
    }
    return grid;
}

RQQ two_point_by_reconstruction(const CorrelatorTable &table)
{
    const RQQ q1 = RQQ::variable(Var::q1);
    const RQQ q2 = RQQ(RQ::variable(Var::q2));
    const auto in = make_input<RQQ>(0, 2, Convention::monomial, Var::q, {q1, q2});
    return two_point_coefficient(theorem1_total(in, 3, table), 0);
}

namespace
{

// Coefficients R_k = sum_{a in {0, inf, q}} Res_a (1-x)^k/k! g1(x)/(x - q) dx.
std::vector<RQ> prop31_residues(int m, const CorrelatorTable &table)
{
    using X = RatFun<RQ>;
    const RQ q = RQ::variable(Var::q);
    const X x = X::variable(Var::x);
    const X kernel = embed<RQ>(table.one_point.with_var(Var::x)) / (x - X(q));
    std::vector<RQ> r;
    X power(1);
    for (int k = 0; k <= m; ++k) {
        const X f = power * X(RQ(factorial(k).inverse())) * kernel;
        r.push_back(residue_zero_infinity(f, {q}));
        power = power * (X(1) - x);
    }
    return r;
}

std::vector<RQ> prop31_residues_roots(int m, const CorrelatorTable &table)
{
    using X = RatFun<RC>;
    const RC q = qc();
    const X x = xc();
    const X kernel = embed<RC>(table.one_point.with_var(Var::x)) / (x - X(q));
    std::vector<RQ> r;
    X power(1);
    for (int k = 0; k <= m; ++k) {
        const X f = power * X(RC(factorial(k).inverse())) * kernel;
        RC acc;
        for (int j = 0; j < 12; ++j) {
            acc -= residue_at(f, root(j));
        }
        r.push_back(convert<RQ>(acc));
        power = power * (X(1) - x);
    }
    return r;
}

TauSeries assemble(const std::vector<RQ> &r, int m)
{
    const RQ q = RQ::variable(Var::q);
    TauSeries s(tau_names_q(), m);
    for (int k = 0; k <= m; ++k) {
        s.add(Monomial{k}, r[static_cast<std::size_t>(k)]);
    }
    const TauSeries tau = TauSeries::variable(tau_names_q(), m, 0);
    return s * series_exp(tau.scaled(q / (RQ(1) - q)));
}

} // namespace

TauSeries prop31_rhs(int m, const CorrelatorTable &table) { return assemble(prop31_residues(m, table), m); }

TauSeries prop31_rhs_roots(int m, const CorrelatorTable &table)
{
    return assemble(prop31_residues_roots(m, table), m);
}

TSeries<RC> hodge_substitute(const RCC &expr, int m, int cyclotomic_order)
{
    const auto pf = partial_fractions(expr, cyclotomic_order);
    if (pf.polynomial.degree() >= 1) {
        throw UnsupportedAtom("polynomial part of degree " + std::to_string(pf.polynomial.degree()));
    }
    const RC base = prefactor_exponent();
    TSeries<RC> acc(tau_names(), m);
    if (pf.polynomial.degree() == 0) {
        acc += exp_tau(base, m).scaled(pf.polynomial.coeff(0));
    }
    for (const auto &t : pf.terms) {
        if (is_zero(t.pole)) {
            throw UnsupportedAtom("pole at x = 0");
        }
        if (t.multiplicity > 2) {
            throw UnsupportedAtom("atom of multiplicity " + std::to_string(t.multiplicity));
        }
        const RC zeta = RC(1) / t.pole;
        const TSeries<RC> e = exp_tau(base - zeta, m);
        if (t.multiplicity == 1) {
            // c/(x - a) = -c zeta/(1 - zeta x)
            acc += e.scaled(-t.coeff * zeta);
        } else {
            // c/(x - a)^2 = c zeta^2/(1 - zeta x)^2
            acc += (tau_poly(RC(1), -zeta, m) * e).scaled(t.coeff * zeta * zeta);
        }
    }
    return acc;
}

TauSeries prop31_closed(int m, const CorrelatorTable &table)
{
    return to_rational(hodge_substitute(table.hodge_mixed, m));
}

TauSeries prop31_total_display(int m)
{
    const RC q = qc(), one(1);
    const RC i = root(3), w = root(2), wi = root(10), w2 = root(4), w2i = root(8);
    auto e = [&](const RC &b) { return exp_tau(b, m); };
    TSeries<RC> s(tau_names(), m);
    s += e(-one).scaled(-(RC(5) * q - RC(6)) / (RC(24) * (q - one) * (q - one)));
    s += e(one).scaled((RC(5) * q + RC(6)) / (RC(24) * (q + one) * (q + one)));
    s += (tau_poly(one, -one, m) * e(-one)).scaled(one / (RC(24) * (q - one)));
    s += (tau_poly(one, one, m) * e(one)).scaled(-one / (RC(24) * (q + one)));
    s += (e(-i).scaled(-i * q + one) + e(i).scaled(i * q + one)).scaled(one / (RC(8) * (q * q + one)));
    s += (e(-w).scaled(-(one + w) * q + (RC(2) - w)) + e(-wi).scaled(-(one + wi) * q + (RC(2) - wi)))
             .scaled(one / (RC(18) * (q * q - q + one)));
    s += (e(-w2).scaled((one - w2) * q + (RC(2) + w2)) + e(-w2i).scaled((one - w2i) * q + (RC(2) + w2i)))
             .scaled(one / (RC(18) * (q * q + q + one)));
    return to_rational(s * e(prefactor_exponent()));
}

TauSeries prop31_simplified_display(int m, bool flipped_sign)
{
    const RC q = qc(), one(1);
    const int sign = flipped_sign ? 1 : -1;
    auto e = [&](const RC &b) { return exp_tau(b, m); };
    TSeries<RC> s(tau_names(), m);
    for (int k : {0, 6}) {
        const RC z = root(k);
        const TSeries<RC> body = tau_poly((RC(5) - RC(4) * z * q) / (RC(24) * (one - z * q) * (one - z * q)),
                                          z / (RC(24) * (one - z * q)), m);
        s += body * e(RC(sign) * z);
    }
    for (int k : {3, 9}) {
        const RC z = root(k);
        s += e(RC(sign) / z).scaled(one / (RC(4) * (one - z * z) * (one - z * q)));
    }
    for (int k : {2, 10, 4, 8}) {
        const RC z = root(k);
        s += e(RC(sign) / z).scaled(one / (RC(6) * (one - z * z) * (one - z * q)));
    }
    return to_rational(s * e(prefactor_exponent()));
}

} // namespace qk1
