#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qk1/ratfun.hpp"

namespace qk1
{

// Expression over integers, the variables q, x, q1, q2 (and L, a, w),
// + - * / ^ and parentheses. Exponents must be integers.
struct Expr {
    enum class Kind { integer, variable, neg, add, sub, mul, div, pow };
    Kind kind = Kind::integer;
    mpz_class value;  // integer literal
    Var var = Var::none;
    long exponent = 0; // pow
    std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

// Throws ParseError (with byte offset) or NonIntegerExponent.
ExprPtr parse_expr(std::string_view text);
std::string to_string(const ExprPtr &e);
std::set<Var> variables(const ExprPtr &e);

// Evaluates into any field T, given the value of each variable.
template <typename T>
T evaluate(const ExprPtr &e, const std::function<T(Var)> &bind)
{
    switch (e->kind) {
    case Expr::Kind::integer:
        return T(Rational(e->value));
    case Expr::Kind::variable:
        return bind(e->var);
    case Expr::Kind::neg:
        return -evaluate<T>(e->args[0], bind);
    case Expr::Kind::add:
        return evaluate<T>(e->args[0], bind) + evaluate<T>(e->args[1], bind);
    case Expr::Kind::sub:
        return evaluate<T>(e->args[0], bind) - evaluate<T>(e->args[1], bind);
    case Expr::Kind::mul:
        return evaluate<T>(e->args[0], bind) * evaluate<T>(e->args[1], bind);
    case Expr::Kind::div:
        return evaluate<T>(e->args[0], bind) / evaluate<T>(e->args[1], bind);
    case Expr::Kind::pow: {
        T base = evaluate<T>(e->args[0], bind);
        long k = e->exponent < 0 ? -e->exponent : e->exponent;
        T r(1);
        while (k > 0) {
            if (k & 1) {
                r = r * base;
            }
            base = base * base;
            k >>= 1;
        }
        return e->exponent < 0 ? T(1) / r : r;
    }
    }
    throw Error("bad expression node");
}

// A univariate rational function over Q. More than one variable is a
// VariableMismatch.
RatFun<Rational> parse_ratfun(std::string_view text);

// A rational function in two variables as an element of Q(inner)(outer).
RatFun<RatFun<Rational>> parse_bivariate(std::string_view text, Var outer, Var inner);

} // namespace qk1
