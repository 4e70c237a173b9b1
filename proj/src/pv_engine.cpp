#include "pvkit/pv_engine.hpp"

#include <numeric>
#include <set>

#include "pvkit/groebner.hpp"

namespace pvkit {

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Scalar: return "scalar";
        case Shape::Diagonal: return "diagonal";
        case Shape::Unipotent2: return "unipotent";
    }
    return "?";
}

DiffSystem DiffSystem::scalar(const DiffField& k, const RatFunc& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "scalar system needs a != 0");
    return DiffSystem{k, Shape::Scalar, {a}};
}

DiffSystem DiffSystem::diagonal(const DiffField& k, std::vector<RatFunc> a) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "diagonal system needs at least one entry");
    for (const auto& v : a)
        if (v.is_zero()) throw Error(ErrorCode::ZeroInput, "diagonal entries must be nonzero");
    return DiffSystem{k, Shape::Diagonal, std::move(a)};
}

DiffSystem DiffSystem::unipotent(const DiffField& k, const RatFunc& b) { return DiffSystem{k, Shape::Unipotent2, {b}}; }

std::size_t DiffSystem::size() const { return shape == Shape::Unipotent2 ? 2 : entries.size(); }

std::size_t DiffSystem::num_y() const { return shape == Shape::Unipotent2 ? 4 : entries.size(); }

std::vector<std::vector<RatFunc>> DiffSystem::matrix() const {
    if (shape == Shape::Unipotent2) return {{RatFunc(1), entries[0]}, {RatFunc(0), RatFunc(1)}};
    std::size_t n = entries.size();
    std::vector<std::vector<RatFunc>> A(n, std::vector<RatFunc>(n, RatFunc(0)));
    for (std::size_t i = 0; i < n; ++i) A[i][i] = entries[i];
    return A;
}

std::vector<std::string> DiffSystem::y_names() const {
    if (shape == Shape::Unipotent2) return {"Y11", "Y12", "Y21", "Y22"};
    if (shape == Shape::Scalar) return {"Y"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < entries.size(); ++i) v.push_back("Y" + std::to_string(i + 1));
    return v;
}

std::string DiffSystem::to_string() const {
    if (shape == Shape::Scalar) return "scalar(" + entries[0].to_string() + ")";
    if (shape == Shape::Unipotent2) return "unipotent(" + entries[0].to_string() + ")";
    std::string s = "diag(";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].to_string();
    return s + ")";
}

std::vector<std::string> var_names(const DiffSystem& s, std::size_t n_t) {
    auto v = s.y_names();
    for (std::size_t i = 0; i < n_t; ++i) v.push_back("t" + std::to_string(i + 1));
    return v;
}

LaurentPoly sigma_apply(const DiffSystem& s, const LaurentPoly& f) {
    std::size_t m = f.nvars();
    LaurentPoly g = f.map_coeffs([&](const RatFunc& c) { return apply_sigma(s.field, c); });
    std::vector<LaurentPoly> images;
    for (std::size_t i = 0; i < m; ++i) images.push_back(LaurentPoly::var(m, i));
    if (s.shape == Shape::Unipotent2) {
        const RatFunc& b = s.entries[0];
        images[0] = images[0] + b * LaurentPoly::var(m, 2);
        images[1] = images[1] + b * LaurentPoly::var(m, 3);
    } else {
        for (std::size_t i = 0; i < s.entries.size(); ++i) images[i] = s.entries[i] * images[i];
    }
    return g.substitute(images);
}

LaurentPoly SigmaIdeal::normal_form(const LaurentPoly& f) const {
    std::size_t ny = ambient.num_y(), m = f.nvars();
    if (f.is_zero()) return f;
    if (m < nvars()) throw Error(ErrorCode::InvalidArgument, "polynomial has fewer variables than the ideal's ring");
    switch (kind) {
        case Kind::Binomial: {
            LaurentPoly r(m);
            LatticeValue one(RatFunc(1), IVec(n_t, 0));
            for (const auto& [e, c] : f.terms()) {
                IVec ey(e.begin(), e.begin() + long(ny));
                auto [res, v] = lattice.reduce(ey, one);
                IVec ne = e;
                for (std::size_t i = 0; i < ny; ++i) ne[i] = res[i];
                for (std::size_t i = 0; i < n_t; ++i) ne[ny + i] += i < v.t.size() ? v.t[i] : 0;
                r.add_term(ne, c * v.c);
            }
            return r;
        }
        case Kind::Linear: {
            std::vector<long> src(m);
            for (std::size_t i = 0; i < m; ++i) src[i] = i < nvars() ? long(i) : -1;
            std::vector<LaurentPoly> images;
            for (std::size_t i = 0; i < m; ++i) {
                if (i < ny && substitution[i]) images.push_back(substitution[i]->remap(m, src));
                else images.push_back(LaurentPoly::var(m, i));
            }
            return f.substitute(images);
        }
        case Kind::Groebner:
            return reduce(f, basis);
    }
    return f;
}

bool SigmaIdeal::sigma_stable() const {
    for (const auto& g : generators)
        if (!contains(sigma_apply(ambient, g))) return false;
    return true;
}

std::vector<std::string> SigmaIdeal::generator_strings() const {
    auto names = var_names(ambient, n_t);
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.to_string(names));
    return out;
}

namespace {

std::optional<Poly> poly_root(const Poly& p, unsigned k) {
    if (p.degree() <= 0) return p.degree() == 0 && p.lc().is_one() ? std::optional<Poly>(Poly(1)) : std::nullopt;
    if (p.degree() % long(k) != 0) return std::nullopt;
    std::size_t d = std::size_t(p.degree()) / k;
    std::vector<CycloNum> r(d + 1, CycloNum(0));
    r[d] = CycloNum(1);
    for (std::size_t i = 1; i <= d; ++i) {
        Poly cur = Poly(r).pow(k);
        std::size_t idx = k * d - i;
        r[d - i] = (p.coeff(idx) - cur.coeff(idx)) / CycloNum(long(k));
    }
    Poly root(r);
    if (root.pow(k) != p) return std::nullopt;
    return root;
}

bool closed_power(const RatFunc& c, unsigned k) {
    return poly_root(c.num().monic(), k) && poly_root(c.den(), k);
}

IVec scaled(const IVec& v, long s) {
    IVec r = v;
    for (auto& x : r) x *= s;
    return r;
}

struct TorsionElem {
    IVec mu;
    long order;
};

// all elements of the torsion subgroup of Z^n / lattice, zero first, and the group exponent
template <class V>
std::vector<TorsionElem> torsion_elements(const ValuedLattice<V>& L, long& exponent) {
    std::size_t n = L.dim();
    std::vector<IVec> rows;
    for (const auto& r : L.rows()) rows.push_back(r.e);
    SmithForm sf = smith_form(rows, n);
    std::vector<std::pair<IVec, long>> gens;
    exponent = 1;
    for (std::size_t i = 0; i < sf.diag.size(); ++i)
        if (sf.diag[i] > 1) {
            gens.emplace_back(sf.basis[i], sf.diag[i]);
            exponent = std::lcm(exponent, sf.diag[i]);
        }
    std::vector<TorsionElem> out{{IVec(n, 0), 1}};
    std::vector<long> c(gens.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == gens[i].second) c[i++] = 0;
        if (i == c.size()) break;
        IVec mu(n, 0);
        long order = 1;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            for (std::size_t k = 0; k < n; ++k) mu[k] += c[j] * gens[j].first[k];
            long d = gens[j].second;
            order = std::lcm(order, d / std::gcd(c[j], d));
        }
        out.push_back({mu, order});
    }
    return out;
}

LatticeValue one_value(std::size_t n_t) { return LatticeValue(RatFunc(1), IVec(n_t, 0)); }

RatFunc system_power(const DiffSystem& s, const IVec& mu, long N) {
    std::vector<RatFunc> prods;
    for (const auto& a : s.entries) prods.push_back(sigma_product(s.field, a, N));
    return power_product(prods, mu);
}

struct SplitInfo {
    long ell = 1;
    long ell_closed = 1;
    std::optional<IVec> gen;
    LatticeValue h;
    CycloNum zeta = CycloNum(1);
};

SplitInfo split_info(const PVPresentation& p) {
    SplitInfo si;
    if (!p.system.binomial()) return si;
    const auto& L = p.ideal.lattice;
    long E;
    auto tors = torsion_elements(L, E);
    unsigned N = p.system.field.constants_conductor;
    std::vector<std::tuple<IVec, LatticeValue, CycloNum>> split;
    for (std::size_t i = 1; i < tors.size(); ++i) {
        const auto& [mu, o] = tors[i];
        auto [res, V] = L.reduce(scaled(mu, o), one_value(p.n_t));
        if (!is_zero_vec(res)) throw std::logic_error("torsion element of wrong order");
        if (closed_power(V.c, unsigned(o))) ++si.ell_closed;
        auto h = value_root(V, unsigned(o), N);
        if (!h) continue;
        RatFunc z = power_product(p.system.entries, mu) * h->c / apply_sigma(p.system.field, h->c);
        if (!z.is_constant()) continue;
        split.emplace_back(mu, *h, z.constant_value());
    }
    si.ell = long(split.size()) + 1;
    for (const auto& [mu, h, z] : split) {
        if (long(root_of_unity_order(z)) == si.ell) {
            si.gen = mu;
            si.h = h;
            si.zeta = z;
            break;
        }
    }
    return si;
}

// number of torsion classes mu of Z^n / L with A_{step E}^mu a sigma^{step E}-quotient
long fixed_class_count(const DiffSystem& s, const ValuedLattice<LatticeValue>& L, long step) {
    long E;
    auto tors = torsion_elements(L, E);
    DiffField kE = s.field.power(step * E);
    long count = 0;
    for (const auto& t : tors) {
        if (is_zero_vec(t.mu)) {
            ++count;
            continue;
        }
        if (solve_mult(kE, system_power(s, t.mu, step * E))) ++count;
    }
    return count;
}

struct Invariants {
    long ell = 1, ell_closed = 1, m = 1, m_component = 1;
};

Invariants invariants(const PVPresentation& p) {
    Invariants inv;
    if (!p.system.binomial()) return inv;
    SplitInfo si = split_info(p);
    inv.ell = si.ell;
    inv.ell_closed = si.ell_closed;
    inv.m = fixed_class_count(p.system, p.ideal.lattice, 1);
    ValuedLattice<LatticeValue> L0 = p.ideal.lattice;
    if (si.gen && !L0.insert(*si.gen, si.h)) throw std::logic_error("component relation is inconsistent");
    inv.m_component = fixed_class_count(p.system, L0, inv.ell);
    return inv;
}

void finalize(PVPresentation& p) {
    if (!p.ideal.sigma_stable()) throw Error(ErrorCode::NotSigmaStable, "generated ideal is not sigma-stable");
    Invariants inv = invariants(p);
    p.ell = inv.ell;
    p.ell_closed = inv.ell_closed;
    p.m_inv = inv.m;
    p.m_component = inv.m_component;
    p.m_product = inv.ell * inv.m_component;
    if (p.m_product != p.m_inv) throw std::logic_error("m-invariant routes disagree");
    p.constants_ext_degree = 1;
    p.caveats.push_back("relations sought with exponents of sup-norm <= " + std::to_string(p.search_bound));
    if (p.ell >= 2) {
        std::vector<LaurentPoly> e;
        for (const auto& c : decompose(p)) e.push_back(c.idempotent);
        p.idempotents = e;
    }
}

}  // namespace

std::optional<LatticeValue> value_root(const LatticeValue& v, unsigned k, unsigned conductor) {
    IVec t = v.t;
    for (auto& x : t) {
        if (x % long(k) != 0) return std::nullopt;
        x /= long(k);
    }
    if (v.c.is_zero()) return std::nullopt;
    CycloNum lc = v.c.lc();
    auto roots = kth_roots(lc, k, conductor);
    if (roots.empty()) return std::nullopt;
    auto n = poly_root(v.c.num().monic(), k);
    auto d = poly_root(v.c.den(), k);
    if (!n || !d) return std::nullopt;
    return LatticeValue(RatFunc(roots.front()) * RatFunc(*n, *d), t);
}

PVPresentation presentation_from_relations(const DiffSystem& sys, std::size_t n_t,
                                           const std::vector<std::pair<IVec, LatticeValue>>& rows, long m_max) {
    if (!sys.binomial()) throw Error(ErrorCode::UnsupportedShape, "relations need a scalar or diagonal system");
    std::size_t n = sys.num_y();
    PVPresentation p;
    p.system = sys;
    p.n_t = n_t;
    p.search_bound = m_max;
    SigmaIdeal& I = p.ideal;
    I.ambient = sys;
    I.n_t = n_t;
    I.kind = SigmaIdeal::Kind::Binomial;
    I.lattice = ValuedLattice<LatticeValue>(n);
    for (const auto& [e, v] : rows) {
        LatticeValue vv = v;
        vv.t.resize(n_t, 0);
        if (!I.lattice.insert(e, vv)) throw Error(ErrorCode::InvalidArgument, "relations generate the unit ideal");
    }
    std::size_t m = n + n_t;
    for (const auto& [e, v] : I.lattice.display_rows()) {
        IVec ey(m, 0), et(m, 0);
        for (std::size_t i = 0; i < n; ++i) ey[i] = e[i];
        for (std::size_t i = 0; i < n_t; ++i) et[n + i] = i < v.t.size() ? v.t[i] : 0;
        I.generators.push_back(LaurentPoly::monomial(m, ey) - LaurentPoly::monomial(m, et, v.c));
    }
    p.krull_dim = long(n) - long(I.lattice.rank());
    finalize(p);
    return p;
}

PVPresentation presentation_unipotent(const DiffSystem& sys, std::size_t n_t, const LatticeValue& scale,
                                      const std::optional<RatFunc>& f, long m_max) {
    if (sys.shape != Shape::Unipotent2) throw Error(ErrorCode::UnsupportedShape, "expected a unipotent system");
    PVPresentation p;
    p.system = sys;
    p.n_t = n_t;
    p.search_bound = m_max;
    std::size_t m = 4 + n_t;
    IVec et(m, 0);
    for (std::size_t i = 0; i < n_t; ++i) et[4 + i] = i < scale.t.size() ? scale.t[i] : 0;
    LaurentPoly c = LaurentPoly::monomial(m, et, scale.c);
    SigmaIdeal& I = p.ideal;
    I.ambient = sys;
    I.n_t = n_t;
    I.kind = SigmaIdeal::Kind::Linear;
    I.substitution.assign(4, std::nullopt);
    I.substitution[0] = c;
    I.substitution[2] = LaurentPoly(m);
    I.substitution[3] = c;
    auto Y = [&](std::size_t i) { return LaurentPoly::var(m, i); };
    I.generators = {Y(0) - c, Y(2), Y(3) - c};
    if (f) {
        I.substitution[1] = (*f) * c;
        I.generators.push_back(Y(1) - (*f) * Y(0));
    }
    p.krull_dim = f ? 0 : 1;
    p.unipotent_free = !f;
    finalize(p);
    return p;
}

PVPresentation build_pv_scalar(const DiffSystem& sys, long m_max, Budget* budget) {
    if (sys.shape != Shape::Scalar) throw Error(ErrorCode::UnsupportedShape, "build_pv_scalar needs a scalar system");
    std::vector<std::pair<IVec, LatticeValue>> rows;
    if (auto t = torsion_order(sys.field, sys.entries[0], m_max, budget))
        rows.emplace_back(IVec{t->order}, LatticeValue(t->witness, {}));
    return presentation_from_relations(sys, 0, rows, m_max);
}

PVPresentation build_pv_diagonal(const DiffSystem& sys, long m_max, Budget* budget) {
    if (sys.shape == Shape::Unipotent2) throw Error(ErrorCode::UnsupportedShape, "build_pv_diagonal needs a diagonal system");
    if (sys.entries.size() > 3) throw Error(ErrorCode::DimensionTooLarge, "diagonal systems are limited to n <= 3");
    auto L = relation_lattice(sys.field, sys.entries, m_max, budget);
    std::vector<std::pair<IVec, LatticeValue>> rows;
    for (const auto& r : L.rows) rows.emplace_back(r.exps, LatticeValue(r.witness, {}));
    return presentation_from_relations(sys, 0, rows, m_max);
}

PVPresentation build_pv_unipotent(const DiffSystem& sys, long m_max) {
    if (sys.shape != Shape::Unipotent2) throw Error(ErrorCode::UnsupportedShape, "build_pv_unipotent needs a unipotent system");
    auto f = solve_add(sys.field, sys.entries[0]);
    return presentation_unipotent(sys, 0, LatticeValue(RatFunc(1), {}), f, m_max);
}

PVPresentation build_pv(const DiffSystem& sys, long m_max, Budget* budget) {
    switch (sys.shape) {
        case Shape::Scalar: return build_pv_scalar(sys, m_max, budget);
        case Shape::Diagonal: return build_pv_diagonal(sys, m_max, budget);
        case Shape::Unipotent2: return build_pv_unipotent(sys, m_max);
    }
    throw Error(ErrorCode::UnsupportedShape, "unknown shape");
}

long compute_ell(const PVPresentation& p) { return invariants(p).ell; }

long compute_m(const PVPresentation& p) {
    Invariants inv = invariants(p);
    if (inv.m != inv.ell * inv.m_component) throw std::logic_error("m-invariant routes disagree");
    return inv.m;
}

std::vector<Component> decompose(const PVPresentation& p) {
    const DiffSystem& s = p.system;
    std::size_t m = p.ideal.nvars();
    SplitInfo si = split_info(p);
    if (si.ell == 1) {
        return {Component{LaurentPoly(m, RatFunc(1)), p.ideal.generators, s.matrix()}};
    }
    if (!si.gen) throw Error(ErrorCode::NoExplicitIdempotents, "split classes do not form a cyclic group");
    long ell = si.ell;
    std::size_t ny = s.num_y();
    IVec e(m, 0), et(m, 0);
    for (std::size_t i = 0; i < ny; ++i) e[i] = (*si.gen)[i];
    for (std::size_t i = 0; i < p.n_t; ++i) et[ny + i] = -(i < si.h.t.size() ? si.h.t[i] : 0);
    LaurentPoly Z = LaurentPoly::monomial(m, e) * LaurentPoly::monomial(m, et, si.h.c.inverse());
    std::vector<LaurentPoly> Zk{LaurentPoly(m, RatFunc(1))};
    for (long k = 1; k < ell; ++k) Zk.push_back(p.ideal.normal_form(Zk.back() * Z));
    std::vector<std::vector<RatFunc>> a_ell = s.matrix();
    for (std::size_t i = 0; i < s.entries.size(); ++i) a_ell[i][i] = sigma_product(s.field, s.entries[i], ell);
    std::vector<Component> out;
    RatFunc inv_ell = RatFunc(CycloNum(BigRational(1, ell)));
    for (long i = 0; i < ell; ++i) {
        LaurentPoly ei(m);
        for (long k = 0; k < ell; ++k) ei = ei + RatFunc(si.zeta.pow(i * k)) * Zk[std::size_t(k)];
        ei = inv_ell * ei;
        auto gens = p.ideal.generators;
        gens.push_back(Z - LaurentPoly(m, RatFunc(si.zeta.pow(-i))));
        out.push_back(Component{ei, gens, a_ell});
    }
    // idempotent identities modulo q
    const SigmaIdeal& q = p.ideal;
    LaurentPoly sum(m);
    for (long i = 0; i < ell; ++i) {
        const auto& ei = out[std::size_t(i)].idempotent;
        sum = sum + ei;
        if (!q.contains(ei * ei - ei)) throw std::logic_error("idempotent is not idempotent");
        if (!q.contains(sigma_apply(s, ei) - out[std::size_t((i + 1) % ell)].idempotent))
            throw std::logic_error("sigma does not permute the idempotents");
        for (long j = i + 1; j < ell; ++j)
            if (!q.contains(ei * out[std::size_t(j)].idempotent)) throw std::logic_error("idempotents are not orthogonal");
    }
    if (!q.contains(sum - LaurentPoly(m, RatFunc(1)))) throw std::logic_error("idempotents do not sum to one");
    return out;
}

SimplicityResult check_simple(const PVPresentation& p, long degree_bound) {
    if (!p.system.binomial()) throw Error(ErrorCode::UnsupportedShape, "check_simple covers scalar and diagonal systems");
    SimplicityResult out;
    out.degree_bound = degree_bound;
    const auto& L = p.ideal.lattice;
    std::size_t n = p.system.num_y(), m = p.ideal.nvars();
    unsigned N = p.system.field.constants_conductor;
    long E;
    torsion_elements(L, E);
    LatticeValue one = one_value(p.n_t);
    std::set<IVec> seen;
    IVec mu(n, -degree_bound);
    while (true) {
        std::size_t i = 0;
        while (i < n && mu[i] == degree_bound) mu[i++] = -degree_bound;
        if (i == n) break;
        ++mu[i];
        auto res = L.reduce(mu, one).first;
        if (is_zero_vec(res) || !seen.insert(res).second) continue;
        auto h = solve_mult(p.system.field, power_product(p.system.entries, res));
        if (!h) continue;
        IVec ey(m, 0);
        for (std::size_t k = 0; k < n; ++k) ey[k] = res[k];
        if (!L.contains(scaled(res, E), one)) {
            out.simple = false;
            out.witness = LaurentPoly::monomial(m, ey) - LaurentPoly(m, h->witness);
            return out;
        }
        long o = 1;
        while (!L.contains(scaled(res, o), one)) ++o;
        LatticeValue V = L.reduce(scaled(res, o), one).second;
        RatFunc gamma = V.c / h->witness.pow(o);
        if (!gamma.is_constant()) throw std::logic_error("torsion value is not a constant multiple of the witness power");
        LatticeValue g(gamma, V.t);
        auto c = value_root(g, unsigned(o), N);
        if (!c) continue;
        IVec et(m, 0);
        for (std::size_t k = 0; k < p.n_t; ++k) et[n + k] = k < c->t.size() ? c->t[k] : 0;
        out.simple = false;
        out.witness = LaurentPoly::monomial(m, ey) - LaurentPoly::monomial(m, et, c->c * h->witness);
        return out;
    }
    return out;
}

SigmaIdeal ideal_extend(const std::vector<LaurentPoly>& I, const DiffField& k, std::size_t nvars) {
    for (const auto& g : I)
        if (!g.has_constant_coefficients())
            throw Error(ErrorCode::InvalidArgument, "ideal_extend needs generators over the constants");
    SigmaIdeal J;
    J.ambient = DiffSystem::diagonal(k, std::vector<RatFunc>(nvars, RatFunc(1)));
    J.kind = SigmaIdeal::Kind::Groebner;
    J.generators = I;
    J.basis = groebner_basis(I);
    return J;
}

namespace {

void contract_one(const DiffSystem& amb, LaurentPoly f, std::vector<LaurentPoly>& out,
                  std::vector<std::pair<std::size_t, std::size_t>>& steps) {
    if (f.is_zero()) return;
    f = f.leading().second.inverse() * f;
    if (f.has_constant_coefficients()) {
        out.push_back(f);
        return;
    }
    RatFunc c;
    for (const auto& [e, v] : f.terms())
        if (!v.is_constant()) {
            c = v;
            break;
        }
    LaurentPoly f1 = sigma_apply(amb, f) - f;
    LaurentPoly g = c.inverse() * f;
    LaurentPoly f2 = sigma_apply(amb, g) - g;
    std::size_t s = f.support_size();
    steps.emplace_back(s, f1.support_size());
    steps.emplace_back(s, f2.support_size());
    if (f1.support_size() >= s || f2.support_size() >= s) throw std::logic_error("support size did not decrease");
    contract_one(amb, f1, out, steps);
    contract_one(amb, f2, out, steps);
}

}  // namespace

ContractResult ideal_contract(const SigmaIdeal& J) {
    const DiffSystem& amb = J.ambient;
    for (const auto& a : amb.entries)
        if (amb.shape == Shape::Unipotent2 || !a.is_one())
            throw Error(ErrorCode::InvalidArgument, "ideal_contract needs sigma(Y) = Y on the indeterminates");
    auto G = J.kind == SigmaIdeal::Kind::Groebner ? J.basis : groebner_basis(J.generators);
    for (const auto& g : G)
        if (!reduce(sigma_apply(amb, g), G).is_zero()) throw Error(ErrorCode::NotSigmaStable, "ideal is not sigma-stable");
    ContractResult r;
    std::vector<LaurentPoly> consts;
    for (const auto& g : J.generators) contract_one(amb, g, consts, r.steps);
    r.generators = groebner_basis(consts);
    return r;
}

}  // namespace pvkit
