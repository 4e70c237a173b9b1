#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvkit/galois_group.hpp"

namespace pvkit {

struct Request {
    std::string command = "pv";  // group | pv | invariants | basechange | check-connection | verify-examples
    std::string sigma = "shift";
    std::string q = "2";
    std::string system;
    std::string ext;  // rootofunity:N | transcendental:K
    std::string u, v;  // matrices: entries split by ',', rows by ';'
    long m_max = 12;
    long degree_bound = 6;
    bool timing = false;
};

struct Outcome {
    int exit_code = 0;
    nlohmann::json report;
};

struct GoldenItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

DiffField request_field(const Request& r);
ConstantsExtension parse_extension(const std::string& text);
PolyMatrix parse_matrix(const std::string& text, const PVPresentation& p);

nlohmann::json presentation_json(const PVPresentation& p);
nlohmann::json group_json(const GroupDesc& g, const DiffSystem& s);

std::vector<GoldenItem> golden_suite();
Outcome run(const Request& r);
std::string render_text(const nlohmann::json& report);

}  // namespace pvkit
