#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvkit/laurent.hpp"
#include "pvkit/rational_solve.hpp"

namespace pvkit {

enum class Shape { Scalar, Diagonal, Unipotent2 };
const char* shape_name(Shape s);

// sigma(Y) = A Y with A = a (scalar), diag(a_1..a_n) or [[1, b], [0, 1]]
struct DiffSystem {
    DiffField field;
    Shape shape = Shape::Scalar;
    std::vector<RatFunc> entries;

    static DiffSystem scalar(const DiffField& k, const RatFunc& a);
    static DiffSystem diagonal(const DiffField& k, std::vector<RatFunc> a);
    static DiffSystem unipotent(const DiffField& k, const RatFunc& b);

    std::size_t size() const;   // n of the n x n matrix
    std::size_t num_y() const;  // number of Y indeterminates
    bool binomial() const { return shape != Shape::Unipotent2; }
    std::vector<std::vector<RatFunc>> matrix() const;
    std::vector<std::string> y_names() const;
    std::string to_string() const;
};

// Variables are laid out as Y (num_y), then T (transcendental constants), then any extras
// (the X block of the functor construction); sigma fixes T and the extras.
LaurentPoly sigma_apply(const DiffSystem& s, const LaurentPoly& f);
std::vector<std::string> var_names(const DiffSystem& s, std::size_t n_t);

struct SigmaIdeal {
    enum class Kind { Binomial, Linear, Groebner };

    DiffSystem ambient;
    std::size_t n_t = 0;
    Kind kind = Kind::Binomial;
    std::vector<LaurentPoly> generators;
    ValuedLattice<LatticeValue> lattice;                   // Binomial: Y^e = value
    std::vector<std::optional<LaurentPoly>> substitution;  // Linear: Y_i -> replacement
    std::vector<LaurentPoly> basis;                        // Groebner

    std::size_t nvars() const { return ambient.num_y() + n_t; }
    LaurentPoly normal_form(const LaurentPoly& f) const;
    bool contains(const LaurentPoly& f) const { return normal_form(f).is_zero(); }
    bool sigma_stable() const;
    std::vector<std::string> generator_strings() const;
};

struct PVPresentation {
    DiffSystem system;
    SigmaIdeal ideal;
    long ell = 1;
    long m_inv = 1;
    long krull_dim = 0;
    long constants_ext_degree = 1;
    std::optional<std::vector<LaurentPoly>> idempotents;
    long search_bound = 12;
    std::size_t n_t = 0;
    bool partial = false;
    std::vector<std::string> caveats;

    // derived bookkeeping
    long ell_closed = 1;   // idempotent count once constants are algebraically closed
    long m_component = 1;  // the component factor of the product formula
    long m_product = 1;    // ell * m_component
    bool unipotent_free = false;  // Unipotent2 with no rational solution
};

PVPresentation build_pv_scalar(const DiffSystem& sys, long m_max = 12, Budget* budget = nullptr);
PVPresentation build_pv_diagonal(const DiffSystem& sys, long m_max = 12, Budget* budget = nullptr);
PVPresentation build_pv_unipotent(const DiffSystem& sys, long m_max = 12);
PVPresentation build_pv(const DiffSystem& sys, long m_max = 12, Budget* budget = nullptr);

// presentation from explicit relations Y^e = value (n_t transcendental constants); invariants recomputed
PVPresentation presentation_from_relations(const DiffSystem& sys, std::size_t n_t,
                                           const std::vector<std::pair<IVec, LatticeValue>>& rows, long m_max);
// unipotent presentation Y11 = c, Y21 = 0, Y22 = c and optionally Y12 = c f
PVPresentation presentation_unipotent(const DiffSystem& sys, std::size_t n_t, const LatticeValue& scale,
                                      const std::optional<RatFunc>& f, long m_max);

long compute_ell(const PVPresentation& p);
long compute_m(const PVPresentation& p);

struct Component {
    LaurentPoly idempotent;
    std::vector<LaurentPoly> ideal;
    std::vector<std::vector<RatFunc>> a_ell;  // sigma^{ell-1}(A) ... sigma(A) A
};
std::vector<Component> decompose(const PVPresentation& p);

struct SimplicityResult {
    bool simple = true;
    long degree_bound = 0;
    std::optional<LaurentPoly> witness;  // generator of a proper sigma-ideal strictly containing q
};
SimplicityResult check_simple(const PVPresentation& p, long degree_bound = 6);

SigmaIdeal ideal_extend(const std::vector<LaurentPoly>& I, const DiffField& k, std::size_t nvars);

struct ContractResult {
    std::vector<LaurentPoly> generators;  // reduced Groebner basis over the constants
    std::vector<std::pair<std::size_t, std::size_t>> steps;  // support sizes before and after each reduction
};
ContractResult ideal_contract(const SigmaIdeal& J);

// all k-th roots h of a rational function value (c, T-part) with h inside C_K(x)
std::optional<LatticeValue> value_root(const LatticeValue& v, unsigned k, unsigned conductor);

}  // namespace pvkit
