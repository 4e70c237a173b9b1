#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvkit/pv_engine.hpp"

namespace pvkit {

struct GroupDesc {
    long torus_rank = 0;
    std::vector<long> finite_orders;
    long unipotent_dim = 0;
    std::optional<std::vector<LaurentPoly>> coordinate_ideal;  // in the X variables
    std::string coordinate_error;                              // set when the functor route is unsupported
    unsigned defined_over_conductor = 1;
    bool hypothesis_holds = true;  // C_R' = C_K = D_K for the presentation at hand
    std::string hypothesis_note;

    long dim() const { return torus_rank + unipotent_dim; }
    std::string name() const;
    std::vector<std::string> ideal_strings(const DiffSystem& s) const;
};

struct ConstantsExtension {
    enum class Kind { RootOfUnity, Transcendental };
    Kind kind = Kind::RootOfUnity;
    long value = 1;  // the order of the root of unity, or the number of new symbols

    static ConstantsExtension root_of_unity(long order);
    static ConstantsExtension transcendental(long count);
    std::string to_string() const;
};

std::vector<std::string> x_names(const DiffSystem& s);

std::vector<LaurentPoly> functor_ideal(const PVPresentation& p);
GroupDesc identify_group(const PVPresentation& p);
PVPresentation base_change(const PVPresentation& p, const ConstantsExtension& ext, long degree_bound = 6);
bool group_transport_check(const PVPresentation& p, const ConstantsExtension& ext);

// p over the extended constants with its fundamental matrix rescaled by a new constant
PVPresentation weak_presentation(const PVPresentation& p, const ConstantsExtension& ext);
bool weak_pv_compare(const PVPresentation& p, const PVPresentation& weak);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
// P = V^{-1} U modulo q (so U = V P), required to have constant entries
PolyMatrix connection_matrix_check(const PVPresentation& p, const PolyMatrix& U, const PolyMatrix& V);
// the fundamental matrix Y of the presentation's ring
PolyMatrix fundamental_matrix(const PVPresentation& p);

}  // namespace pvkit
