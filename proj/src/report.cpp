#include "pvkit/report.hpp"

#include <chrono>
#include <sstream>

#include "pvkit/parser.hpp"

namespace pvkit {

using nlohmann::json;

DiffField request_field(const Request& r) {
    if (r.sigma == "shift") return DiffField(SigmaSpec::shift());
    if (r.sigma == "qshift") return DiffField(SigmaSpec::qshift(parse_constant(r.q)));
    throw Error(ErrorCode::InvalidArgument, "sigma must be shift or qshift, got '" + r.sigma + "'");
}

ConstantsExtension parse_extension(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "extension must look like kind:number");
    std::string kind = text.substr(0, colon);
    long v;
    try {
        v = std::stol(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "bad extension count in '" + text + "'");
    }
    if (kind == "rootofunity") return ConstantsExtension::root_of_unity(v);
    if (kind == "transcendental") return ConstantsExtension::transcendental(v);
    throw Error(ErrorCode::InvalidArgument, "unknown extension kind '" + kind + "'");
}

PolyMatrix parse_matrix(const std::string& text, const PVPresentation& p) {
    auto names = var_names(p.system, p.n_t);
    PolyMatrix M;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<LaurentPoly> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) r.push_back(parse_laurent(cell, names));
        M.push_back(r);
    }
    return M;
}

json presentation_json(const PVPresentation& p) {
    json j;
    j["system"] = p.system.to_string();
    j["sigma"] = p.system.field.sigma.to_string();
    j["constants_conductor"] = p.system.field.constants_conductor;
    j["transcendental_constants"] = p.n_t;
    j["generators"] = p.ideal.generator_strings();
    j["ell"] = p.ell;
    j["m_inv"] = p.m_inv;
    j["krull_dim"] = p.krull_dim;
    j["constants_ext_degree"] = p.constants_ext_degree;
    j["search_bound"] = p.search_bound;
    j["partial"] = p.partial;
    j["ell_closed"] = p.ell_closed;
    j["m_component"] = p.m_component;
    j["m_product"] = p.m_product;
    if (p.idempotents) {
        auto names = var_names(p.system, p.n_t);
        std::vector<std::string> e;
        for (const auto& v : *p.idempotents) e.push_back(v.to_string(names));
        j["idempotents"] = e;
    } else {
        j["idempotents"] = nullptr;
    }
    return j;
}

json group_json(const GroupDesc& g, const DiffSystem& s) {
    json j;
    j["name"] = g.name();
    j["torus_rank"] = g.torus_rank;
    j["finite_orders"] = g.finite_orders;
    j["unipotent_dim"] = g.unipotent_dim;
    j["dim"] = g.dim();
    if (g.coordinate_ideal) j["coordinate_ideal"] = g.ideal_strings(s);
    else j["coordinate_ideal"] = nullptr;
    if (!g.coordinate_error.empty()) j["coordinate_error"] = g.coordinate_error;
    j["defined_over_conductor"] = g.defined_over_conductor;
    j["hypothesis_holds"] = g.hypothesis_holds;
    j["hypothesis_note"] = g.hypothesis_note;
    return j;
}

namespace {

json simplicity_json(const SimplicityResult& s, const PVPresentation& p) {
    json j;
    j["simple"] = s.simple;
    j["degree_bound"] = s.degree_bound;
    j["witness"] = s.witness ? json(s.witness->to_string(var_names(p.system, p.n_t))) : json(nullptr);
    return j;
}

json matrix_json(const PolyMatrix& M, const PVPresentation& p) {
    auto names = var_names(p.system, p.n_t);
    json rows = json::array();
    for (const auto& r : M) {
        json row = json::array();
        for (const auto& e : r) row.push_back(e.to_string(names));
        rows.push_back(row);
    }
    return rows;
}

void add_caveat(json& j, const std::string& c) {
    for (const auto& v : j["caveats"])
        if (v == c) return;
    j["caveats"].push_back(c);
}

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::DivisionByZeroExpression:
        case ErrorCode::InvalidArgument:
        case ErrorCode::ZeroInput:
        case ErrorCode::ZeroScale:
        case ErrorCode::ShapeMismatch:
            return 1;
        default:
            return 2;
    }
}

GoldenItem item(const std::string& name, bool ok, const std::string& detail) { return GoldenItem{name, ok, detail}; }

template <class F>
GoldenItem guarded(const std::string& name, F f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return item(name, false, std::string("threw ") + e.what());
    }
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return "(" + s + ")";
}

}  // namespace

std::vector<GoldenItem> golden_suite() {
    std::vector<GoldenItem> out;
    DiffField shift(SigmaSpec::shift());
    DiffField q2(SigmaSpec::qshift(CycloNum(2)));

    out.push_back(guarded("A: sigma(y) = -y", [&] {
        auto p = build_pv(DiffSystem::scalar(shift, RatFunc(-1)));
        auto g = identify_group(p);
        auto gens = p.ideal.generator_strings();
        bool ok = gens == std::vector<std::string>{"Y^2 - 1"} && p.ell == 2 && p.krull_dim == 0 &&
                  g.finite_orders == std::vector<long>{2} && g.torus_rank == 0 &&
                  g.ideal_strings(p.system) == std::vector<std::string>{"X^2 - 1"};
        return item("A: sigma(y) = -y", ok, "ideal " + join(gens) + ", ell " + std::to_string(p.ell) + ", group " + g.name());
    }));
    out.push_back(guarded("B: q-logarithm", [&] {
        auto p = build_pv(DiffSystem::unipotent(q2, RatFunc(1)));
        auto g = identify_group(p);
        bool ok = g.unipotent_dim == 1 && g.torus_rank == 0 && p.krull_dim == 1 && p.ell == 1;
        return item("B: q-logarithm", ok, "krull " + std::to_string(p.krull_dim) + ", ell " + std::to_string(p.ell) + ", group " + g.name());
    }));
    out.push_back(guarded("C: square root of t", [&] {
        auto p = build_pv(DiffSystem::scalar(q2, RatFunc(-2)));
        auto g = identify_group(p);
        auto gens = p.ideal.generator_strings();
        std::size_t m = p.ideal.nvars();
        LaurentPoly Z = LaurentPoly::var(m, 0) * LaurentPoly(m, RatFunc::x().inverse());
        bool anti = p.ideal.contains(sigma_apply(p.system, Z) + Z) && !p.ideal.contains(Z);
        bool ok = gens == std::vector<std::string>{"Y^2 - x^2"} && p.ell == 2 && g.finite_orders == std::vector<long>{2} && anti;
        return item("C: square root of t", ok, "ideal " + join(gens) + ", ell " + std::to_string(p.ell) + ", sigma(Y/x) + Y/x in q: " + (anti ? "yes" : "no"));
    }));
    out.push_back(guarded("control: y(x+1) = (x+1)/x y", [&] {
        auto p = build_pv(DiffSystem::scalar(shift, RatFunc(Poly({1, 1}), Poly::x())));
        auto g = identify_group(p);
        auto gens = p.ideal.generator_strings();
        bool ok = gens == std::vector<std::string>{"Y - x"} && g.name() == "trivial" && p.ell == 1;
        return item("control: y(x+1) = (x+1)/x y", ok, "ideal " + join(gens) + ", group " + g.name());
    }));
    out.push_back(guarded("control: shift logarithm", [&] {
        auto p = build_pv(DiffSystem::unipotent(shift, RatFunc(1)));
        auto g = identify_group(p);
        bool ok = p.krull_dim == 0 && g.name() == "trivial";
        return item("control: shift logarithm", ok, "krull " + std::to_string(p.krull_dim) + ", group " + g.name());
    }));
    out.push_back(guarded("control: non-constant connection", [&] {
        auto p = build_pv(DiffSystem::scalar(shift, RatFunc::x()));
        std::size_t m = p.ideal.nvars();
        PolyMatrix U{{LaurentPoly::var(m, 0)}}, V{{RatFunc::x() * LaurentPoly::var(m, 0)}};
        try {
            connection_matrix_check(p, U, V);
        } catch (const Error& e) {
            bool ok = e.code() == ErrorCode::NotConstant;
            return item("control: non-constant connection", ok, e.what());
        }
        return item("control: non-constant connection", false, "accepted a non-constant connection matrix");
    }));
    out.push_back(guarded("control: mu_2 against mu_3", [&] {
        auto a = build_pv(DiffSystem::scalar(shift, RatFunc(-1)));
        auto b = build_pv(DiffSystem::scalar(DiffField(SigmaSpec::shift(), 3), RatFunc(CycloNum::zeta(3))));
        bool same = weak_pv_compare(a, b);
        return item("control: mu_2 against mu_3", !same, same ? "groups compared equal" : "groups differ");
    }));
    out.push_back(guarded("control: division by zero", [&] {
        try {
            parse_expression("x/(x-x)");
        } catch (const Error& e) {
            return item("control: division by zero", e.code() == ErrorCode::DivisionByZeroExpression, e.what());
        }
        return item("control: division by zero", false, "parsed");
    }));
    return out;
}

Outcome run(const Request& r) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    json& j = out.report;
    j["schema_version"] = 1;
    json req;
    req["command"] = r.command;
    if (r.command != "verify-examples") {
        req["sigma"] = r.sigma;
        if (r.sigma == "qshift") req["q"] = r.q;
        req["system"] = r.system;
        req["m_max"] = r.m_max;
        req["degree_bound"] = r.degree_bound;
        if (!r.ext.empty()) req["ext"] = r.ext;
        if (!r.u.empty()) req["u"] = r.u;
        if (!r.v.empty()) req["v"] = r.v;
    }
    j["request"] = req;
    j["caveats"] = json::array();
    try {
        if (r.command == "verify-examples") {
            json items = json::array();
            bool all = true;
            for (const auto& g : golden_suite()) {
                items.push_back({{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
                all = all && g.passed;
            }
            j["examples"] = items;
            j["all_passed"] = all;
            if (!all) out.exit_code = 3;
        } else {
            if (r.system.empty()) throw Error(ErrorCode::InvalidArgument, "--system is required");
            if (r.m_max < 1 || r.degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be positive");
            DiffSystem sys = parse_system(r.system, request_field(r));
            PVPresentation p = build_pv(sys, r.m_max);
            j["presentation"] = presentation_json(p);
            for (const auto& c : p.caveats) add_caveat(j, c);
            if (r.command == "pv" && sys.binomial()) {
                auto s = check_simple(p, r.degree_bound);
                j["simplicity"] = simplicity_json(s, p);
                if (!s.simple) add_caveat(j, "partial presentation: a larger sigma-ideal exists");
            }
            if (r.command == "group" || r.command == "invariants" || r.command == "basechange") {
                GroupDesc g = identify_group(p);
                j["group"] = group_json(g, sys);
                if (!g.hypothesis_holds) add_caveat(j, g.hypothesis_note);
            }
            if (r.command == "basechange") {
                if (r.ext.empty()) throw Error(ErrorCode::InvalidArgument, "basechange needs --ext");
                auto ext = parse_extension(r.ext);
                PVPresentation q = base_change(p, ext, r.degree_bound);
                GroupDesc gq = identify_group(q);
                GroupDesc gp = identify_group(p);
                json b;
                b["extension"] = ext.to_string();
                b["presentation"] = presentation_json(q);
                b["group"] = group_json(gq, q.system);
                b["transport_ok"] = group_transport_check(p, ext);
                b["invariants_unchanged"] = q.ell == p.ell && q.m_inv == p.m_inv && q.krull_dim == p.krull_dim &&
                                            gq.torus_rank == gp.torus_rank && gq.finite_orders == gp.finite_orders &&
                                            gq.unipotent_dim == gp.unipotent_dim;
                j["base_change"] = b;
                for (const auto& c : q.caveats) add_caveat(j, c);
            } else if (r.command == "check-connection") {
                if (r.u.empty() || r.v.empty()) throw Error(ErrorCode::InvalidArgument, "check-connection needs --u and --v");
                auto P = connection_matrix_check(p, parse_matrix(r.u, p), parse_matrix(r.v, p));
                j["connection"] = {{"matrix", matrix_json(P, p)}};
            } else if (r.command != "pv" && r.command != "group" && r.command != "invariants") {
                throw Error(ErrorCode::InvalidArgument, "unknown command '" + r.command + "'");
            }
        }
    } catch (const Error& e) {
        j["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
        out.exit_code = exit_code_for(e.code());
    }
    if (r.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        j["timing_ms"] = ms;
    }
    return out;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return "[" + s + "]";
    }
    return v.dump();
}

void render(std::ostringstream& os, const json& v, const std::string& indent) {
    for (const auto& [k, x] : v.items()) {
        if (x.is_object()) {
            os << indent << k << ":\n";
            render(os, x, indent + "  ");
        } else if (x.is_array() && !x.empty() && (x[0].is_object() || x[0].is_string())) {
            os << indent << k << ":\n";
            for (const auto& e : x) {
                if (e.is_object()) {
                    if (e.contains("passed")) {
                        os << indent << "  [" << (e["passed"].get<bool>() ? "pass" : "FAIL") << "] "
                           << e["name"].get<std::string>() << ": " << e["detail"].get<std::string>() << "\n";
                    } else {
                        render(os, e, indent + "  ");
                    }
                } else {
                    os << indent << "  " << scalar_text(e) << "\n";
                }
            }
        } else {
            os << indent << k << ": " << scalar_text(x) << "\n";
        }
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render(os, report, "");
    return os.str();
}

}  // namespace pvkit
