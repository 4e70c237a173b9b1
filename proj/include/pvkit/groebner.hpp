#pragma once

#include <utility>
#include <vector>

#include "pvkit/laurent.hpp"

namespace pvkit {

// graded reverse lexicographic order on nonnegative exponent vectors
bool grevlex_less(const IVec& a, const IVec& b);
std::pair<IVec, RatFunc> leading_term(const LaurentPoly& f);
// remainder of f under full reduction by G
LaurentPoly reduce(const LaurentPoly& f, const std::vector<LaurentPoly>& G);
// reduced Groebner basis, monic, sorted by leading monomial
std::vector<LaurentPoly> groebner_basis(const std::vector<LaurentPoly>& F);

}  // namespace pvkit
