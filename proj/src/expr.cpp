#include "qk1/expr.hpp"

#include <cctype>

namespace qk1
{

namespace
{

ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args)
{
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
}

class Parser
{
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) {
            throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        }
        return e;
    }

  private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = node(Expr::Kind::add, {lhs, term()});
            } else if (accept('-')) {
                lhs = node(Expr::Kind::sub, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term()
    {
        ExprPtr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = node(Expr::Kind::mul, {lhs, unary()});
            } else if (accept('/')) {
                lhs = node(Expr::Kind::div, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary()
    {
        if (accept('-')) {
            return node(Expr::Kind::neg, {unary()});
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        if (!accept('^')) {
            return base;
        }
        skip();
        const std::size_t at = pos_;
        std::size_t look = pos_;
        while (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
            ++look;
        }
        if (look > pos_ && look < s_.size() && s_[look] == '.') {
            throw NonIntegerExponent("exponent at offset " + std::to_string(at) + " is not an integer");
        }
        // The exponent is parsed as a general operand and must reduce to an integer.
        ExprPtr ex = unary();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->args = {base};
        e->exponent = integer_value(ex, at);
        return e;
    }

    static long integer_value(const ExprPtr &ex, std::size_t at)
    {
        if (!variables(ex).empty()) {
            throw NonIntegerExponent("exponent at offset " + std::to_string(at) + " is not an integer");
        }
        const Rational v = evaluate<Rational>(ex, [](Var) -> Rational { return Rational(0); });
        if (!v.is_integer() || !v.numerator().fits_slong_p()) {
            throw NonIntegerExponent("exponent " + v.to_string() + " at offset " + std::to_string(at) +
                                     " is not an integer");
        }
        return v.numerator().get_si();
    }

    ExprPtr primary()
    {
        skip();
        if (pos_ >= s_.size()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') {
                throw ParseError(pos_, "expected ')'");
            }
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            if (pos_ < s_.size() && s_[pos_] == '.') {
                throw ParseError(pos_, "only integer literals are supported");
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::integer;
            e->value = mpz_class(std::string(s_.substr(start, pos_ - start)));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            const std::string_view name = s_.substr(start, pos_ - start);
            const Var v = var_from_name(name);
            if (v == Var::none || v == Var::u) {
                throw ParseError(start, "unknown variable '" + std::string(name) + "'");
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::variable;
            e->var = v;
            return e;
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

int precedence(const Expr &e)
{
    switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
        return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div:
        return 2;
    case Expr::Kind::neg:
        return 3;
    case Expr::Kind::pow:
        return 4;
    default:
        return 5;
    }
}

std::string print(const ExprPtr &e, int ctx)
{
    std::string s;
    const int p = precedence(*e);
    switch (e->kind) {
    case Expr::Kind::integer:
        s = e->value.get_str();
        break;
    case Expr::Kind::variable:
        s = std::string(var_name(e->var));
        break;
    case Expr::Kind::neg:
        s = "-" + print(e->args[0], 3);
        break;
    case Expr::Kind::add:
        s = print(e->args[0], 1) + " + " + print(e->args[1], 2);
        break;
    case Expr::Kind::sub:
        s = print(e->args[0], 1) + " - " + print(e->args[1], 2);
        break;
    case Expr::Kind::mul:
        s = print(e->args[0], 2) + "*" + print(e->args[1], 3);
        break;
    case Expr::Kind::div:
        s = print(e->args[0], 2) + "/" + print(e->args[1], 3);
        break;
    case Expr::Kind::pow:
        s = print(e->args[0], 5) + "^" + (e->exponent < 0 ? "(" + std::to_string(e->exponent) + ")"
                                                          : std::to_string(e->exponent));
        break;
    }
    return p < ctx ? "(" + s + ")" : s;
}

void collect(const ExprPtr &e, std::set<Var> &out)
{
    if (e->kind == Expr::Kind::variable) {
        out.insert(e->var);
    }
    for (const auto &a : e->args) {
        collect(a, out);
    }
}

} // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ExprPtr &e) { return print(e, 0); }

std::set<Var> variables(const ExprPtr &e)
{
    std::set<Var> out;
    collect(e, out);
    return out;
}

RatFun<Rational> parse_ratfun(std::string_view text)
{
    const ExprPtr e = parse_expr(text);
    const auto vars = variables(e);
    if (vars.size() > 1) {
        throw VariableMismatch("expression uses more than one variable");
    }
    return evaluate<RatFun<Rational>>(e, [](Var v) { return RatFun<Rational>::variable(v); });
}

RatFun<RatFun<Rational>> parse_bivariate(std::string_view text, Var outer, Var inner)
{
    using RQ = RatFun<Rational>;
    using RQQ = RatFun<RQ>;
    const ExprPtr e = parse_expr(text);
    return evaluate<RQQ>(e, [&](Var v) {
        if (v == outer) {
            return RQQ::variable(outer);
        }
        if (v == inner) {
            return RQQ(RQ::variable(inner));
        }
        throw VariableMismatch("unexpected variable " + std::string(var_name(v)));
    });
}

} // namespace qk1
