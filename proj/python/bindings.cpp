#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pvkit/parser.hpp"
#include "pvkit/report.hpp"

namespace py = pybind11;
using namespace pvkit;

namespace {

DiffField field(const std::string& sigma, const std::string& q) {
    Request r;
    r.sigma = sigma;
    r.q = q;
    return request_field(r);
}

DiffField with_conductor(DiffField k, const std::vector<RatFunc>& v) {
    for (const auto& f : v) k.constants_conductor = lcm_u(k.constants_conductor, f.conductor());
    return k;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Picard-Vessiot rings and Galois groups of small difference systems";
    py::register_exception<Error>(m, "PvkitError", PyExc_ValueError);

    m.def("parse_expression", [](const std::string& s) { return parse_expression(s).to_string(); },
          "canonical form of a rational function in x");

    m.def(
        "run_json",
        [](const std::string& command, const std::string& system, const std::string& sigma, const std::string& q,
           const std::string& ext, const std::string& u, const std::string& v, long m_max, long degree_bound) {
            Request r;
            r.command = command;
            r.system = system;
            r.sigma = sigma;
            r.q = q;
            r.ext = ext;
            r.u = u;
            r.v = v;
            r.m_max = m_max;
            r.degree_bound = degree_bound;
            Outcome o = run(r);
            return py::make_tuple(o.exit_code, o.report.dump());
        },
        py::arg("command"), py::arg("system") = "", py::arg("sigma") = "shift", py::arg("q") = "2", py::arg("ext") = "",
        py::arg("u") = "", py::arg("v") = "", py::arg("m_max") = 12, py::arg("degree_bound") = 6);

    m.def(
        "solve_mult",
        [](const std::string& r, const std::string& sigma, const std::string& q) -> std::optional<std::string> {
            RatFunc f = parse_expression(r);
            auto s = solve_mult(with_conductor(field(sigma, q), {f}), f);
            if (!s) return std::nullopt;
            return s->witness.to_string();
        },
        py::arg("r"), py::arg("sigma") = "shift", py::arg("q") = "2");

    m.def(
        "solve_add",
        [](const std::string& b, const std::string& sigma, const std::string& q) -> std::optional<std::string> {
            RatFunc f = parse_expression(b);
            auto s = solve_add(with_conductor(field(sigma, q), {f}), f);
            if (!s) return std::nullopt;
            return s->to_string();
        },
        py::arg("b"), py::arg("sigma") = "shift", py::arg("q") = "2");

    m.def(
        "dispersion",
        [](const std::string& p, const std::string& r, const std::string& sigma, const std::string& q) {
            RatFunc a = parse_expression(p), b = parse_expression(r);
            if (!a.is_polynomial() || !b.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "dispersion needs polynomials");
            return dispersion(a.num(), b.num(), field(sigma, q).sigma);
        },
        py::arg("p"), py::arg("r"), py::arg("sigma") = "shift", py::arg("q") = "2");

    m.def(
        "torsion_order",
        [](const std::string& a, const std::string& sigma, const std::string& q, long m_max) -> std::optional<py::tuple> {
            RatFunc f = parse_expression(a);
            auto t = torsion_order(with_conductor(field(sigma, q), {f}), f, m_max);
            if (!t) return std::nullopt;
            return py::make_tuple(t->order, t->witness.to_string());
        },
        py::arg("a"), py::arg("sigma") = "shift", py::arg("q") = "2", py::arg("m_max") = 12);

    m.def(
        "relation_lattice",
        [](const std::vector<std::string>& a, const std::string& sigma, const std::string& q, long m_max) {
            std::vector<RatFunc> v;
            for (const auto& s : a) v.push_back(parse_expression(s));
            auto L = relation_lattice(with_conductor(field(sigma, q), v), v, m_max);
            std::vector<std::pair<IVec, std::string>> out;
            for (const auto& r : L.rows) out.emplace_back(r.exps, r.witness.to_string());
            return out;
        },
        py::arg("a"), py::arg("sigma") = "shift", py::arg("q") = "2", py::arg("m_max") = 12);

    m.def("invariant_factors", &invariant_factors, py::arg("rows"), py::arg("n"));

    m.def("verify_examples", [] {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& g : golden_suite()) out.emplace_back(g.name, g.passed, g.detail);
        return out;
    });
}
