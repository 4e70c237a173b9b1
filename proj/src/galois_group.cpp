#include "pvkit/galois_group.hpp"

#include <map>
#include <numeric>

#include "pvkit/groebner.hpp"
#include "pvkit/linalg.hpp"

namespace pvkit {

std::string GroupDesc::name() const {
    std::vector<std::string> parts;
    if (torus_rank == 1) parts.push_back("G_m");
    else if (torus_rank > 1) parts.push_back("G_m^" + std::to_string(torus_rank));
    for (long d : finite_orders) parts.push_back("Z/" + std::to_string(d) + "Z");
    if (unipotent_dim) parts.push_back("G_a");
    if (parts.empty()) return "trivial";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

std::vector<std::string> GroupDesc::ideal_strings(const DiffSystem& s) const {
    std::vector<std::string> out;
    if (!coordinate_ideal) return out;
    auto names = x_names(s);
    for (const auto& g : *coordinate_ideal) out.push_back(g.to_string(names));
    return out;
}

ConstantsExtension ConstantsExtension::root_of_unity(long order) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
    return {Kind::RootOfUnity, order};
}

ConstantsExtension ConstantsExtension::transcendental(long count) {
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "need at least one transcendental constant");
    return {Kind::Transcendental, count};
}

std::string ConstantsExtension::to_string() const {
    return (kind == Kind::RootOfUnity ? "rootofunity:" : "transcendental:") + std::to_string(value);
}

std::vector<std::string> x_names(const DiffSystem& s) {
    auto v = s.y_names();
    for (auto& n : v) n[0] = 'X';
    return v;
}

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) { return exact_div(a * b, poly_gcd(a, b)).monic(); }

// expand the residue of a substituted generator on the basis of Y-monomials and x-powers;
// each coefficient is a polynomial in X over the constants, with any T-factor stripped
std::vector<LaurentPoly> coefficient_polys(const LaurentPoly& r, std::size_t ny, std::size_t nt, std::size_t nx) {
    Poly den(1);
    for (const auto& [e, c] : r.terms()) den = poly_lcm(den, c.den());
    std::map<std::pair<IVec, long>, LaurentPoly> groups;
    std::map<std::pair<IVec, long>, IVec> tpart;
    for (const auto& [e, c] : r.terms()) {
        Poly num = c.num() * exact_div(den, c.den());
        IVec ey(e.begin(), e.begin() + long(ny));
        IVec et(e.begin() + long(ny), e.begin() + long(ny + nt));
        IVec ex(e.begin() + long(ny + nt), e.end());
        for (long k = 0; k <= num.degree(); ++k) {
            if (num.coeff(std::size_t(k)).is_zero()) continue;
            auto key = std::make_pair(ey, k);
            auto [it, fresh] = tpart.emplace(key, et);
            if (!fresh && it->second != et)
                throw Error(ErrorCode::UnsupportedSubstitutionShape, "coefficient mixes constants of different degree");
            auto& g = groups.try_emplace(key, LaurentPoly(nx)).first->second;
            g.add_term(ex, RatFunc(num.coeff(std::size_t(k))));
        }
    }
    std::vector<LaurentPoly> out;
    for (auto& [k, g] : groups)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

std::vector<LaurentPoly> substituted_residues(const PVPresentation& p) {
    const DiffSystem& s = p.system;
    std::size_t ny = s.num_y(), nt = p.n_t, nv = ny + nt, m = nv + ny;
    std::vector<long> src(m);
    for (std::size_t i = 0; i < m; ++i) src[i] = i < nv ? long(i) : -1;
    std::vector<LaurentPoly> images;
    for (std::size_t i = 0; i < m; ++i) images.push_back(LaurentPoly::var(m, i));
    auto Y = [&](std::size_t i) { return LaurentPoly::var(m, i); };
    auto X = [&](std::size_t i) { return LaurentPoly::var(m, nv + i); };
    if (s.binomial()) {
        for (std::size_t i = 0; i < ny; ++i) images[i] = Y(i) * X(i);
    } else {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                images[2 * i + j] = Y(2 * i) * X(j) + Y(2 * i + 1) * X(2 + j);
    }
    std::vector<LaurentPoly> out;
    for (const auto& g : p.ideal.generators) {
        LaurentPoly r = p.ideal.normal_form(g.remap(m, src).substitute(images));
        for (auto& c : coefficient_polys(r, ny, nt, ny)) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

std::vector<LaurentPoly> functor_ideal(const PVPresentation& p) {
    auto polys = substituted_residues(p);
    std::size_t nx = p.system.num_y();
    if (!p.system.binomial()) return groebner_basis(polys);
    ValuedLattice<LatticeValue> L(nx);
    LatticeValue one(RatFunc(1), {});
    for (const auto& g : polys) {
        if (g.support_size() != 2)
            throw Error(ErrorCode::UnsupportedSubstitutionShape, "coefficient polynomial is not a binomial");
        auto it = g.terms().begin();
        const auto& [u, a] = *it++;
        const auto& [v, b] = *it;
        if (!(a + b).is_zero())
            throw Error(ErrorCode::UnsupportedSubstitutionShape, "binomial coefficients do not cancel at the identity");
        IVec d(nx);
        for (std::size_t i = 0; i < nx; ++i) d[i] = u[i] - v[i];
        L.insert(d, one);
    }
    std::vector<LaurentPoly> out;
    for (const auto& [e, v] : L.display_rows())
        out.push_back(LaurentPoly::monomial(nx, e) - LaurentPoly(nx, RatFunc(1)));
    return out;
}

GroupDesc identify_group(const PVPresentation& p) {
    GroupDesc g;
    const DiffSystem& s = p.system;
    g.defined_over_conductor = s.field.constants_conductor;
    if (s.binomial()) {
        std::vector<IVec> rows;
        for (const auto& r : p.ideal.lattice.rows()) rows.push_back(r.e);
        auto f = invariant_factors(rows, s.num_y());
        g.torus_rank = long(s.num_y()) - long(f.size());
        for (long d : f)
            if (d > 1) g.finite_orders.push_back(d);
    } else {
        g.unipotent_dim = p.unipotent_free ? 1 : 0;
    }
    try {
        g.coordinate_ideal = functor_ideal(p);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedSubstitutionShape) throw;
        g.coordinate_error = e.what();
    }
    g.hypothesis_holds = !p.partial;
    g.hypothesis_note = p.partial ? "presentation is partial; group identification is not certified"
                                  : "constants of the ring agree with the base constants, and D_K = C_K for this base field";
    if (g.dim() != p.krull_dim) throw std::logic_error("group dimension differs from the Krull dimension");
    return g;
}

namespace {

LatticeValue unipotent_scale(const PVPresentation& p) {
    const auto& c = *p.ideal.substitution[0];
    const auto& [e, v] = c.leading();
    return LatticeValue(v, IVec(e.begin() + 4, e.end()));
}

std::optional<RatFunc> unipotent_f(const PVPresentation& p) {
    const auto& s = p.ideal.substitution[1];
    if (!s) return std::nullopt;
    return s->leading().second / unipotent_scale(p).c;
}

PVPresentation rebuild(const PVPresentation& p, const DiffSystem& sys, std::size_t n_t, const LatticeValue& rescale) {
    if (!sys.binomial()) {
        LatticeValue sc = unipotent_scale(p) * rescale;
        return presentation_unipotent(sys, n_t, sc, unipotent_f(p), p.search_bound);
    }
    std::vector<std::pair<IVec, LatticeValue>> rows;
    for (const auto& r : p.ideal.lattice.rows()) {
        long deg = std::accumulate(r.e.begin(), r.e.end(), 0L);
        rows.emplace_back(r.e, r.v * rescale.pow(deg));
    }
    return presentation_from_relations(sys, n_t, rows, p.search_bound);
}

DiffSystem extended_system(const DiffSystem& s, const ConstantsExtension& ext) {
    DiffSystem t = s;
    if (ext.kind == ConstantsExtension::Kind::RootOfUnity)
        t.field.constants_conductor = lcm_u(s.field.constants_conductor, unsigned(ext.value));
    return t;
}

std::size_t extended_nt(const PVPresentation& p, const ConstantsExtension& ext) {
    return p.n_t + (ext.kind == ConstantsExtension::Kind::Transcendental ? std::size_t(ext.value) : 0);
}

}  // namespace

PVPresentation base_change(const PVPresentation& p, const ConstantsExtension& ext, long degree_bound) {
    std::size_t nt = extended_nt(p, ext);
    PVPresentation q = rebuild(p, extended_system(p.system, ext), nt, LatticeValue(RatFunc(1), IVec(nt, 0)));
    q.caveats.push_back("constants extended by " + ext.to_string());
    if (q.system.binomial()) {
        auto s = check_simple(q, degree_bound);
        if (!s.simple) {
            q.partial = true;
            q.caveats.push_back("extended ring is not simple; a larger sigma-ideal exists");
        }
    }
    return q;
}

bool group_transport_check(const PVPresentation& p, const ConstantsExtension& ext) {
    auto a = functor_ideal(p);
    auto b = functor_ideal(base_change(p, ext));
    return a == b;
}

PVPresentation weak_presentation(const PVPresentation& p, const ConstantsExtension& ext) {
    std::size_t nt = extended_nt(p, ext);
    LatticeValue c(RatFunc(1), IVec(nt, 0));
    if (ext.kind == ConstantsExtension::Kind::Transcendental) c.t[p.n_t] = 1;
    else c.c = RatFunc(CycloNum::zeta(unsigned(ext.value)));
    PVPresentation w = rebuild(p, extended_system(p.system, ext), nt, c);
    w.caveats.push_back("fundamental matrix rescaled by a new constant");
    return w;
}

bool weak_pv_compare(const PVPresentation& p, const PVPresentation& weak) {
    if (p.system.shape != weak.system.shape || p.system.size() != weak.system.size())
        throw Error(ErrorCode::ShapeMismatch, "systems have different shapes");
    GroupDesc a = identify_group(p), b = identify_group(weak);
    return a.torus_rank == b.torus_rank && a.finite_orders == b.finite_orders && a.unipotent_dim == b.unipotent_dim;
}

PolyMatrix fundamental_matrix(const PVPresentation& p) {
    std::size_t m = p.ideal.nvars(), n = p.system.size();
    PolyMatrix Y(n, std::vector<LaurentPoly>(n, LaurentPoly(m)));
    if (p.system.binomial()) {
        for (std::size_t i = 0; i < n; ++i) Y[i][i] = LaurentPoly::var(m, i);
    } else {
        for (std::size_t i = 0; i < 4; ++i) Y[i / 2][i % 2] = LaurentPoly::var(m, i);
    }
    return Y;
}

namespace {

LaurentPoly det(const PolyMatrix& A, const SigmaIdeal& q) {
    std::size_t n = A.size();
    if (n == 1) return q.normal_form(A[0][0]);
    LaurentPoly r(A[0][0].nvars());
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(A[i][k]);
            minor.push_back(row);
        }
        LaurentPoly t = q.normal_form(A[0][j] * det(minor, q));
        r = j % 2 ? r - t : r + t;
    }
    return r;
}

PolyMatrix adjugate(const PolyMatrix& A, const SigmaIdeal& q) {
    std::size_t n = A.size(), m = A[0][0].nvars();
    if (n == 1) return {{LaurentPoly(m, RatFunc(1))}};
    PolyMatrix adj(n, std::vector<LaurentPoly>(n, LaurentPoly(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<LaurentPoly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(A[r][c]);
                minor.push_back(row);
            }
            LaurentPoly d = det(minor, q);
            adj[j][i] = (i + j) % 2 ? -d : d;
        }
    return adj;
}

// residues of Z^n modulo the relation lattice, when the quotient is finite
std::vector<IVec> residue_basis(const ValuedLattice<LatticeValue>& L) {
    std::size_t n = L.dim();
    std::vector<IVec> rows;
    for (const auto& r : L.rows()) rows.push_back(r.e);
    SmithForm sf = smith_form(rows, n);
    LatticeValue one(RatFunc(1), {});
    std::vector<IVec> out;
    std::vector<long> c(sf.diag.size(), 0);
    while (true) {
        IVec mu(n, 0);
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) mu[k] += c[j] * sf.basis[j][k];
        out.push_back(L.reduce(mu, one).first);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == sf.diag[i]) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

LaurentPoly unit_inverse(const PVPresentation& p, const LaurentPoly& d) {
    const SigmaIdeal& q = p.ideal;
    std::size_t m = q.nvars(), ny = p.system.num_y();
    if (d.is_zero()) throw Error(ErrorCode::NotFundamental, "determinant vanishes modulo the ideal");
    if (d.is_monomial()) {
        const auto& [e, c] = d.leading();
        bool ok = true;
        if (!p.system.binomial())
            for (std::size_t i = 0; i < ny; ++i) ok = ok && e[i] == 0;
        if (ok) {
            IVec ne = e;
            for (auto& v : ne) v = -v;
            return LaurentPoly::monomial(m, ne, c.inverse());
        }
    }
    if (p.system.binomial() && p.krull_dim == 0 && p.n_t == 0) {
        auto basis = residue_basis(q.lattice);
        std::map<IVec, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        std::size_t b = basis.size();
        Matrix<RatFunc> M(b, b);
        for (std::size_t j = 0; j < b; ++j) {
            LaurentPoly col = q.normal_form(d * LaurentPoly::monomial(m, basis[j]));
            for (const auto& [e, c] : col.terms()) M(index.at(e), j) = c;
        }
        std::vector<RatFunc> rhs(b, RatFunc(0));
        rhs[index.at(IVec(m, 0))] = RatFunc(1);
        if (is_zero(determinant(M))) throw Error(ErrorCode::NotFundamental, "determinant is a zero divisor modulo the ideal");
        auto w = solve_linear(M, rhs);
        LaurentPoly inv(m);
        for (std::size_t j = 0; j < b; ++j) inv.add_term(basis[j], (*w)[j]);
        return inv;
    }
    throw Error(ErrorCode::NotFundamental, "determinant is not a unit modulo the ideal");
}

}  // namespace

PolyMatrix connection_matrix_check(const PVPresentation& p, const PolyMatrix& U, const PolyMatrix& V) {
    std::size_t n = p.system.size(), m = p.ideal.nvars(), ny = p.system.num_y();
    auto check_shape = [&](const PolyMatrix& A) {
        if (A.size() != n) throw Error(ErrorCode::ShapeMismatch, "solution matrix has the wrong size");
        for (const auto& r : A) {
            if (r.size() != n) throw Error(ErrorCode::ShapeMismatch, "solution matrix has the wrong size");
            for (const auto& e : r)
                if (e.nvars() != m) throw Error(ErrorCode::ShapeMismatch, "entry lives in a different ring");
        }
    };
    check_shape(U);
    check_shape(V);
    const SigmaIdeal& q = p.ideal;
    LaurentPoly dinv = unit_inverse(p, det(V, q));
    PolyMatrix adj = adjugate(V, q);
    auto names = var_names(p.system, p.n_t);
    PolyMatrix P(n, std::vector<LaurentPoly>(n, LaurentPoly(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly s(m);
            for (std::size_t k = 0; k < n; ++k) s = s + adj[i][k] * U[k][j];
            LaurentPoly e = q.normal_form(q.normal_form(s) * dinv);
            for (const auto& [ex, c] : e.terms()) {
                bool y_free = true;
                for (std::size_t v = 0; v < ny; ++v) y_free = y_free && ex[v] == 0;
                if (!y_free || !c.is_constant())
                    throw Error(ErrorCode::NotConstant, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                            ") = " + e.to_string(names) + " is not sigma-fixed");
            }
            P[i][j] = e;
        }
    return P;
}

}  // namespace pvkit
