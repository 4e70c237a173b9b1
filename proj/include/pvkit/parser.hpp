#pragma once

#include <string>
#include <vector>

#include "pvkit/pv_engine.hpp"

namespace pvkit {

// rationals, x, zeta(N), + - * / ^ (integer exponents) and parentheses
RatFunc parse_expression(const std::string& text);
// same grammar plus the named variables; negative powers and division need monomial operands
LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& names);
CycloNum parse_constant(const std::string& text);
// scalar(a) | diag(a1, a2, ...) | unipotent(b)
DiffSystem parse_system(const std::string& text, const DiffField& k);

}  // namespace pvkit
