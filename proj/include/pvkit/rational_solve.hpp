#pragma once

#include <optional>
#include <vector>

#include "pvkit/errors.hpp"
#include "pvkit/lattice.hpp"
#include "pvkit/sigma.hpp"

namespace pvkit {

struct MultSolution {
    RatFunc witness;  // sigma(f) = r f, leading numerator coefficient 1
};

struct TorsionCert {
    long order;
    RatFunc witness;  // sigma(g)/g = a^order
};

struct LatticeRow {
    IVec exps;
    RatFunc witness;
};

struct LatticeBasis {
    std::vector<LatticeRow> rows;
    long search_bound = 0;
};

std::optional<MultSolution> solve_mult(const DiffField& k, const RatFunc& r);
std::optional<RatFunc> solve_add(const DiffField& k, const RatFunc& b);
std::optional<TorsionCert> torsion_order(const DiffField& k, const RatFunc& a, long m_max, Budget* budget = nullptr);
LatticeBasis relation_lattice(const DiffField& k, const std::vector<RatFunc>& a, long m_max, Budget* budget = nullptr);

// prod a_i^{e_i}
RatFunc power_product(const std::vector<RatFunc>& a, const IVec& e);
// denominator the solvers use for sigma(f) = r f: any solution is P / U with P a polynomial
Poly mult_universal_denominator(const SigmaSpec& s, const Poly& A, const Poly& B);

}  // namespace pvkit
