#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qk1/display.hpp"
#include "qk1/expr.hpp"
#include "qk1/genus1.hpp"
#include "qk1/verify.hpp"

using namespace qk1;
using nlohmann::ordered_json;

namespace
{

struct Options {
    int order = 3;
    int cyclotomic_order = 12;
    std::string convention = "monomial";
    bool json = false;
    std::string out;
};

// Prints JSON or text to stdout and writes the JSON to --out if given.
void emit(const Options &o, const ordered_json &j, const std::string &text)
{
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            throw std::runtime_error("cannot write " + o.out);
        }
        f << j.dump(2) << "\n";
    }
}

// Smallest k with a^k = 1, if a is a root of unity in Q(zeta_n).
std::optional<int> root_order(const Cyc &a, int n)
{
    Cyc p = a;
    for (int k = 1; k <= n; ++k) {
        if (p == Cyc(1)) {
            return k;
        }
        p = p * a;
    }
    return std::nullopt;
}

RC term_function(Var v, const PartialFractionTerm<Cyc> &t)
{
    return RC(v, Poly<Cyc>(t.coeff), pow(Poly<Cyc>(std::vector<Cyc>{-t.pole, Cyc(1)}), t.multiplicity));
}

int cmd_verify(const Options &o, int criterion, bool timing, bool verbose, bool serial)
{
    VerifyConfig cfg;
    cfg.order = o.order;
    cfg.cyclotomic_order = o.cyclotomic_order;
    cfg.convention = convention_from_name(o.convention);
    cfg.parallel = !serial;
    ReportBundle b;
    if (criterion > 0) {
        b.config = cfg;
        b.criteria.push_back(run_criterion(criterion, cfg));
    } else {
        b = run_acceptance(cfg);
    }
    const std::string js = to_json(b, timing);
    if (o.json) {
        std::cout << js << "\n";
    } else {
        std::cout << to_text(b, verbose);
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            throw std::runtime_error("cannot write " + o.out);
        }
        f << js << "\n";
    }
    return b.pass() ? 0 : 1;
}

int cmd_tau(const Options &o)
{
    const Convention conv = convention_from_name(o.convention);
    const auto in = make_input<Rational>(o.order + 1, o.order, conv);
    const auto tau = solve_tau(in, o.order);
    ordered_json j = {{"order", o.order}, {"convention", convention_name(conv)}, {"tau", to_string(tau)}};
    emit(o, j, to_string(tau) + "\n");
    return 0;
}

int cmd_two_point(const Options &o)
{
    const RQQ q1 = RQQ::variable(Var::q1), q2 = RQQ(RQ::variable(Var::q2));
    const auto in = make_input<RQQ>(0, genus1_cutoff(o.order), Convention::monomial, Var::q, {q1, q2});
    const RQQ ours = two_point_coefficient(theorem1_total(in, o.order), 0);
    const RQQ ref = leequ_reference();
    const RQQ diff = ours - ref;
    ordered_json j = {{"order", o.order},
                      {"reconstruction", to_string(ours)},
                      {"lee_qu", to_string(ref)},
                      {"difference", to_string(diff)},
                      {"pass", diff.is_zero()}};
    emit(o, j,
         "reconstruction: " + to_string(ours) + "\nlee-qu:         " + to_string(ref) +
             "\ndifference:     " + to_string(diff) + "\n");
    return diff.is_zero() ? 0 : 1;
}

int cmd_pf(const Options &o, const std::string &text)
{
    const RQ f = parse_ratfun(text);
    const Var v = f.var() == Var::none ? Var::q : f.var();
    const RC fc = convert<RC>(f).with_var(v);
    const int n = o.cyclotomic_order;
    const auto pf = partial_fractions(fc, n);

    // Galois orbits: rational poles singly, roots of unity by their order.
    std::map<std::string, RC> groups;
    std::vector<std::string> keys;
    for (const auto &t : pf.terms) {
        std::string key;
        if (const auto k = root_order(t.pole, n)) {
            key = "roots of unity of order " + std::to_string(*k);
        } else {
            key = "pole " + to_string(t.pole);
        }
        if (!groups.count(key)) {
            keys.push_back(key);
        }
        groups[key] += term_function(v, t);
    }
    const RC poly(v, pf.polynomial);
    ordered_json terms = ordered_json::array();
    std::string txt = "polynomial part: " + to_string(poly) + "\n";
    for (const auto &t : pf.terms) {
        terms.push_back({{"pole", to_string(t.pole)}, {"multiplicity", t.multiplicity}, {"coefficient", to_string(t.coeff)}});
        std::string pole = to_string(t.pole);
        if (pole.front() != '(') {
            pole = pole.front() == '-' ? "+ " + pole.substr(1) : "- " + pole;
        } else {
            pole = "- " + pole;
        }
        txt += "  " + to_string(t.coeff) + " / (" + std::string(var_name(v)) + " " + pole + ")" +
               (t.multiplicity > 1 ? "^" + std::to_string(t.multiplicity) : "") + "\n";
    }
    ordered_json grouped = ordered_json::array();
    txt += "grouped:\n";
    for (const auto &k : keys) {
        const RC &g = groups[k];
        std::string s;
        try {
            s = to_string(convert<RQ>(g));
        } catch (const Error &) {
            s = to_string(g);
        }
        grouped.push_back({{"group", k}, {"sum", s}});
        txt += "  " + k + ": " + s + "\n";
    }
    ordered_json j = {{"input", to_string(f)}, {"polynomial", to_string(poly)}, {"terms", terms}, {"grouped", grouped}};
    emit(o, j, txt);
    return 0;
}

int cmd_residues(const Options &o, const std::string &text)
{
    const RQ f = parse_ratfun(text);
    const Var v = f.var() == Var::none ? Var::q : f.var();
    const RC fc = convert<RC>(f).with_var(v);
    const auto pf = partial_fractions(fc, o.cyclotomic_order);
    ordered_json list = ordered_json::array();
    std::string txt;
    Cyc total;
    for (const auto &t : pf.terms) {
        if (t.multiplicity != 1) {
            continue;
        }
        total += t.coeff;
        list.push_back({{"at", to_string(t.pole)}, {"residue", to_string(t.coeff)}});
        txt += "Res at " + to_string(t.pole) + " = " + to_string(t.coeff) + "\n";
    }
    const Cyc inf = residue_at(fc, Center<Cyc>::infinity());
    total += inf;
    list.push_back({{"at", "inf"}, {"residue", to_string(inf)}});
    txt += "Res at inf = " + to_string(inf) + "\nsum = " + to_string(total) + "\n";
    ordered_json j = {{"differential", to_string(f) + " d" + std::string(var_name(v))},
                      {"residues", list},
                      {"sum", to_string(total)}};
    emit(o, j, txt);
    return total.is_zero() ? 0 : 1;
}

int cmd_prop31(const Options &o, int m)
{
    const auto rhs = prop31_rhs(m);
    const auto closed = prop31_closed(m);
    const auto diff = rhs - closed;
    ordered_json j = {{"tau_order", m},
                      {"residue_side", to_string(rhs)},
                      {"closed_form", to_string(closed)},
                      {"difference", to_string(diff)},
                      {"pass", diff.is_zero()}};
    emit(o, j,
         "residue side: " + to_string(rhs) + "\nclosed form:  " + to_string(closed) + "\ndifference:   " +
             to_string(diff) + "\n");
    return diff.is_zero() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Genus-1 quantum K-theory of the point: reconstruction and checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--order", o.order, "truncation order D")->check(CLI::Range(1, 12));
    app.add_option("--cyclotomic-order", o.cyclotomic_order, "N, roots of unity of order N")
        ->envname("QK1_CYCLOTOMIC_ORDER")
        ->check(CLI::Range(1, 240));
    app.add_option("--convention", o.convention, "coordinate convention")
        ->check(CLI::IsMember({"monomial", "divided-power"}));
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--out", o.out, "also write the JSON report to this file");

    auto *verify = app.add_subcommand("verify", "run the acceptance suite");
    int criterion = 0;
    bool timing = false, verbose = false, serial = false;
    verify->add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, kCriterionCount));
    verify->add_flag("--timing", timing, "include timings in the JSON report");
    verify->add_flag("-v,--verbose", verbose, "list every check");
    verify->add_flag("--serial", serial, "run criteria one after another");

    auto *tau = app.add_subcommand("tau", "print tau modulo I^(D+1)");
    auto *two = app.add_subcommand("two-point", "Theorem 1 reconstruction against the Lee-Qu form");
    std::string expr;
    auto *pf = app.add_subcommand("pf", "partial fractions of a rational function");
    pf->add_option("expr", expr, "rational function in one variable")->required();
    auto *res = app.add_subcommand("residues", "all residues of f(q) dq");
    res->add_option("expr", expr, "rational function in one variable")->required();
    auto *prop = app.add_subcommand("prop31", "both sides of Proposition 3.1");
    int tau_order = 8;
    prop->add_option("--tau-order", tau_order, "order M of the tau expansion")->check(CLI::Range(0, 30));

    for (auto *sub : {verify, tau, two, pf, res, prop}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            return cmd_verify(o, criterion, timing, verbose, serial);
        }
        if (*tau) {
            return cmd_tau(o);
        }
        if (*two) {
            return cmd_two_point(o);
        }
        if (*pf) {
            return cmd_pf(o, expr);
        }
        if (*res) {
            return cmd_residues(o, expr);
        }
        if (*prop) {
            return cmd_prop31(o, tau_order);
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NonIntegerExponent &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const VariableMismatch &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
