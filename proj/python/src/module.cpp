#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qk1/display.hpp"
#include "qk1/expr.hpp"
#include "qk1/genus1.hpp"
#include "qk1/verify.hpp"

namespace py = pybind11;
using namespace qk1;

namespace
{

py::dict difference_dict(const std::string &a_key, const std::string &a, const std::string &b_key,
                         const std::string &b, const std::string &diff, bool pass)
{
    py::dict d;
    d[a_key.c_str()] = a;
    d[b_key.c_str()] = b;
    d["difference"] = diff;
    d["pass"] = pass;
    return d;
}

} // namespace

PYBIND11_MODULE(_qk1, m)
{
    m.doc() = "Genus-1 quantum K-theory of the point: exact reconstruction and checks";

    static py::exception<Error> base(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NonIntegerExponent>(m, "NonIntegerExponent", base.ptr());
    py::register_exception<VariableMismatch>(m, "VariableMismatch", base.ptr());
    py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", base.ptr());
    py::register_exception<MissingCorrelatorData>(m, "MissingCorrelatorData", base.ptr());
    py::register_exception<IrreducibleDenominator>(m, "IrreducibleDenominator", base.ptr());

    m.def(
        "canonical", [](const std::string &text) { return to_string(parse_ratfun(text)); }, py::arg("text"),
        "Canonical form of a univariate rational function.");

    m.def(
        "tau",
        [](int order, const std::string &convention) {
            const auto in = make_input<Rational>(order + 1, order, convention_from_name(convention));
            return to_string(solve_tau(in, order));
        },
        py::arg("order") = 3, py::arg("convention") = "monomial", "tau modulo I^(order+1).");

    m.def(
        "two_point",
        [](int order) {
            const RQQ q1 = RQQ::variable(Var::q1), q2 = RQQ(RQ::variable(Var::q2));
            RQQ ours;
            {
                py::gil_scoped_release release;
                const auto in = make_input<RQQ>(0, genus1_cutoff(order), Convention::monomial, Var::q, {q1, q2});
                ours = two_point_coefficient(theorem1_total(in, order), 0);
            }
            const RQQ ref = leequ_reference();
            const RQQ diff = ours - ref;
            return difference_dict("reconstruction", to_string(ours), "lee_qu", to_string(ref), to_string(diff),
                                   diff.is_zero());
        },
        py::arg("order") = 3, "Theorem 1 reconstruction of the two-point invariant and the Lee-Qu form.");

    m.def(
        "partial_fractions",
        [](const std::string &text, int cyclotomic_order) {
            const RQ f = parse_ratfun(text);
            const Var v = f.var() == Var::none ? Var::q : f.var();
            const auto pf = partial_fractions(convert<RC>(f).with_var(v), cyclotomic_order);
            py::list terms;
            for (const auto &t : pf.terms) {
                terms.append(py::make_tuple(to_string(t.pole), t.multiplicity, to_string(t.coeff)));
            }
            py::dict d;
            d["polynomial"] = to_string(RC(v, pf.polynomial));
            d["terms"] = terms;
            return d;
        },
        py::arg("text"), py::arg("cyclotomic_order") = 12, "Partial fractions over Q(zeta_N).");

    m.def(
        "prop31",
        [](int tau_order) {
            TauSeries rhs, closed;
            {
                py::gil_scoped_release release;
                rhs = prop31_rhs(tau_order);
                closed = prop31_closed(tau_order);
            }
            const auto diff = rhs - closed;
            return difference_dict("residue_side", to_string(rhs), "closed_form", to_string(closed),
                                   to_string(diff), diff.is_zero());
        },
        py::arg("tau_order") = 8, "Both sides of the one-point identity, expanded in tau.");

    m.def(
        "verify_json",
        [](int order, int cyclotomic_order, const std::string &convention, std::vector<int> criteria,
           bool parallel) {
            VerifyConfig cfg;
            cfg.order = order;
            cfg.cyclotomic_order = cyclotomic_order;
            cfg.convention = convention_from_name(convention);
            cfg.parallel = parallel;
            py::gil_scoped_release release;
            ReportBundle b;
            if (criteria.empty()) {
                b = run_acceptance(cfg);
            } else {
                b.config = cfg;
                for (int id : criteria) {
                    b.criteria.push_back(run_criterion(id, cfg));
                }
            }
            return to_json(b);
        },
        py::arg("order") = 3, py::arg("cyclotomic_order") = 12, py::arg("convention") = "monomial",
        py::arg("criteria") = std::vector<int>{}, py::arg("parallel") = true,
        "Acceptance report as a JSON string.");

    m.attr("criterion_count") = kCriterionCount;
}
