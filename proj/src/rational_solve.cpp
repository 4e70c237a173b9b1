#include "pvkit/rational_solve.hpp"

#include <set>

#include "pvkit/linalg.hpp"

namespace pvkit {

namespace {

Poly sigma_prod(const SigmaSpec& s, const Poly& p, long from, long to) {
    Poly r(1);
    for (long j = from; j <= to; ++j) r = r * sigma_poly(s, p, j);
    return r;
}

// polynomial solutions P of deg <= d of c1 sigma(P) + c0 P = rhs (rhs may be zero)
Matrix<CycloNum> operator_matrix(const SigmaSpec& s, const Poly& c1, const Poly& c0, long d, std::size_t rows) {
    Matrix<CycloNum> M(rows, std::size_t(d + 1));
    for (long k = 0; k <= d; ++k) {
        Poly xk = Poly::monomial(CycloNum(1), std::size_t(k));
        Poly col = c1 * sigma_poly(s, xk) + c0 * xk;
        for (std::size_t i = 0; i < col.coeffs().size(); ++i) M(i, std::size_t(k)) = col.coeffs()[i];
    }
    return M;
}

std::optional<Poly> homogeneous_poly_solution(const SigmaSpec& s, const Poly& c1, const Poly& c0) {
    long n = c1.degree(), m = c0.degree();
    if (n != m) return std::nullopt;
    CycloNum a = c1.lc(), b = c0.lc();
    long d;
    if (s.is_shift()) {
        if (!(a + b).is_zero()) return std::nullopt;
        CycloNum e = c1.coeff(std::size_t(n - 1)) + c0.coeff(std::size_t(n - 1));
        if (n == 0) e = CycloNum(0);
        CycloNum dv = -e / (a * CycloNum(s.step));
        if (!dv.is_rational() || dv.rational().get_den() != 1 || sgn(dv.rational()) < 0) return std::nullopt;
        if (!dv.rational().get_num().fits_slong_p()) return std::nullopt;
        d = dv.rational().get_num().get_si();
    } else {
        if (!discrete_log(s.q, -b / a, d) || d < 0) return std::nullopt;
    }
    auto M = operator_matrix(s, c1, c0, d, std::size_t(n + d + 1));
    auto ns = nullspace(M);
    if (ns.empty()) return std::nullopt;
    return Poly(ns.front());
}

}  // namespace

Poly mult_universal_denominator(const SigmaSpec& s, const Poly& A, const Poly& B) {
    if (A.degree() < 1 || B.degree() < 1) return Poly(1);
    auto H = dispersion(B, A, s);
    if (!H || *H < 1) return Poly(1);
    return poly_gcd(sigma_prod(s, A, 0, *H - 1), sigma_prod(s, B, -*H, -1));
}

std::optional<MultSolution> solve_mult(const DiffField& k, const RatFunc& r) {
    if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "solve_mult needs r != 0");
    const SigmaSpec& s = k.sigma;
    CycloNum u = r.lc();
    Poly A = r.num().monic(), B = r.den();
    long kx = 0;
    if (!s.is_shift()) {
        std::size_t va = A.x_valuation(), vb = B.x_valuation();
        if (va != vb) return std::nullopt;
        A = A.drop_x(va);
        B = B.drop_x(vb);
        // sigma(g)/g equals 1 at x = 0 when g has neither zero nor pole there
        CycloNum at0 = u * A.coeff(0) / B.coeff(0);
        if (!discrete_log(s.q, at0, kx)) return std::nullopt;
        u = u / s.q.pow(kx);
    }
    Poly U = mult_universal_denominator(s, A, B);
    Poly c1 = B * U;
    Poly c0 = -(u * (A * sigma_poly(s, U)));
    auto P = homogeneous_poly_solution(s, c1, c0);
    if (!P) return std::nullopt;
    RatFunc f = RatFunc(*P, U);
    if (kx > 0) f = f * RatFunc(Poly::monomial(CycloNum(1), std::size_t(kx)));
    if (kx < 0) f = f / RatFunc(Poly::monomial(CycloNum(1), std::size_t(-kx)));
    f = f.normalized();
    if (sigma_rat(s, f) != r * f) throw std::logic_error("solve_mult: witness failed re-substitution");
    return MultSolution{f};
}

std::optional<RatFunc> solve_add(const DiffField& k, const RatFunc& b) {
    if (b.is_zero()) return RatFunc();
    const SigmaSpec& s = k.sigma;
    Poly E = b.den();
    Poly U(1);
    Poly E0 = E;
    if (!s.is_shift()) {
        std::size_t v = E.x_valuation();
        E0 = E.drop_x(v);
        U = Poly::monomial(CycloNum(1), v);
    }
    if (E0.degree() >= 1) {
        auto H = dispersion(E0, E0, s);
        if (H && *H >= 1) U = U * poly_gcd(sigma_prod(s, E0, 0, *H - 1), sigma_prod(s, E0, -*H, -1));
    }
    Poly sU = sigma_poly(s, U);
    auto [rhs, rem] = divmod(b.num() * U * sU, E);
    if (!rem.is_zero()) return std::nullopt;
    long u = U.degree();
    long dr = rhs.degree();
    long dmax = s.is_shift() ? std::max(u, dr - u + 1) : std::max(u, dr - u);
    if (dmax < 0) dmax = 0;
    std::size_t rows = std::size_t(std::max(dr, u + dmax) + 1);
    auto M = operator_matrix(s, U, -sU, dmax, rows);
    std::vector<CycloNum> target(rows, CycloNum(0));
    for (std::size_t i = 0; i < rhs.coeffs().size(); ++i) target[i] = rhs.coeffs()[i];
    auto sol = solve_linear(M, target);
    if (!sol) return std::nullopt;
    RatFunc f(Poly(*sol), U);
    Poly q = divmod(f.num(), f.den()).first;
    f = f - RatFunc(q.coeff(0));
    if (sigma_rat(s, f) - f != b) throw std::logic_error("solve_add: solution failed re-substitution");
    return f;
}

RatFunc power_product(const std::vector<RatFunc>& a, const IVec& e) {
    RatFunc r(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (e[i] != 0) r = r * a[i].pow(e[i]);
    return r;
}

std::optional<TorsionCert> torsion_order(const DiffField& k, const RatFunc& a, long m_max, Budget* budget) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "torsion_order needs a != 0");
    if (m_max < 1) throw Error(ErrorCode::InvalidArgument, "m_max must be positive");
    RatFunc am(1);
    for (long m = 1; m <= m_max; ++m) {
        am = am * a;
        spend(budget);
        if (auto sol = solve_mult(k, am)) return TorsionCert{m, sol->witness};
    }
    return std::nullopt;
}

namespace {

// vectors of the box with sup-norm exactly N and first nonzero entry positive, lexicographic
void shell(std::size_t n, long N, IVec& cur, std::size_t pos, bool hit, bool lead, std::vector<IVec>& out) {
    if (pos == n) {
        if (hit) out.push_back(cur);
        return;
    }
    for (long v = -N; v <= N; ++v) {
        if (lead && v < 0) continue;
        cur[pos] = v;
        shell(n, N, cur, pos + 1, hit || std::labs(v) == N, lead && v == 0, out);
    }
}

bool passes_filters(const SigmaSpec& s, const std::vector<RatFunc>& a, const IVec& e) {
    long deg = 0, val = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        deg += e[i] * a[i].degree_at_infinity();
        val += e[i] * a[i].x_valuation();
    }
    if (deg != 0) return false;
    if (!s.is_shift()) return val == 0;
    CycloNum lc(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (e[i] != 0) lc = lc * a[i].lc().pow(e[i]);
    return lc.is_one();
}

}  // namespace

LatticeBasis relation_lattice(const DiffField& k, const std::vector<RatFunc>& a, long m_max, Budget* budget) {
    if (a.size() > 3) throw Error(ErrorCode::DimensionTooLarge, "relation_lattice supports n <= 3");
    for (const auto& v : a)
        if (v.is_zero()) throw Error(ErrorCode::ZeroInput, "relation_lattice entries must be nonzero");
    if (m_max < 1) throw Error(ErrorCode::InvalidArgument, "m_max must be positive");
    std::size_t n = a.size();
    ValuedLattice<RatFunc> L(n);
    std::set<IVec> tested;
    for (long N = 1; N <= m_max; ++N) {
        std::vector<IVec> vs;
        IVec cur(n, 0);
        shell(n, N, cur, 0, false, true, vs);
        for (const IVec& e : vs) {
            auto red = L.reduce(e, RatFunc(1)).first;
            if (is_zero_vec(red) || tested.count(red)) continue;
            tested.insert(red);
            if (!passes_filters(k.sigma, a, e)) continue;
            spend(budget);
            auto sol = solve_mult(k, power_product(a, e));
            if (!sol) continue;
            if (!L.insert(e, sol->witness)) throw std::logic_error("relation_lattice: inconsistent witnesses");
            tested.clear();
        }
    }
    LatticeBasis out;
    out.search_bound = m_max;
    for (auto& [e, g] : L.display_rows()) out.rows.push_back(LatticeRow{e, g});
    for (const auto& row : out.rows)
        if (sigma_rat(k.sigma, row.witness) != power_product(a, row.exps) * row.witness)
            throw std::logic_error("relation_lattice: witness failed re-substitution");
    return out;
}

}  // namespace pvkit
