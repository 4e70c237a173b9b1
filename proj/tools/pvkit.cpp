#include <iostream>

#include <CLI11.hpp>

#include "pvkit/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"pvkit: Picard-Vessiot rings and Galois groups of small difference systems"};
    app.require_subcommand(1);

    pvkit::Request req;
    std::string output = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--sigma", req.sigma, "shift or qshift")->check(CLI::IsMember({"shift", "qshift"}));
        sub->add_option("--q", req.q, "q for the q-shift (a nonzero constant, not a root of unity)");
        sub->add_option("--system", req.system, "scalar(a) | diag(a1, a2, ...) | unipotent(b)")->required();
        sub->add_option("--m-max", req.m_max, "bound on relation exponents");
        sub->add_option("--degree-bound", req.degree_bound, "bound for the simplicity search");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", req.timing, "include wall-clock timing in the report");
    };

    for (const char* name : {"group", "pv", "invariants"}) {
        auto* sub = app.add_subcommand(name, std::string("run the ") + name + " report");
        add_common(sub);
        add_output(sub);
    }
    auto* bc = app.add_subcommand("basechange", "extend the constants and compare");
    add_common(bc);
    add_output(bc);
    bc->add_option("--ext", req.ext, "rootofunity:N or transcendental:K")->required();

    auto* cc = app.add_subcommand("check-connection", "connection matrix between two fundamental solutions");
    add_common(cc);
    add_output(cc);
    cc->add_option("--u", req.u, "first solution matrix, rows split by ';'")->required();
    cc->add_option("--v", req.v, "second solution matrix")->required();

    auto* ve = app.add_subcommand("verify-examples", "run the built-in golden suite");
    add_output(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    req.command = app.get_subcommands().front()->get_name();

    pvkit::Outcome out = pvkit::run(req);
    if (output == "json") std::cout << out.report.dump(2) << "\n";
    else std::cout << pvkit::render_text(out.report);
    if (out.report.contains("error")) std::cerr << "pvkit: " << out.report["error"]["message"].get<std::string>() << "\n";
    return out.exit_code;
}
