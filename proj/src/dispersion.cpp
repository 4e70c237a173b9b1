#include <cmath>
#include <numeric>

#include "pvkit/errors.hpp"
#include "pvkit/sigma.hpp"

namespace pvkit {

namespace {

// Newton interpolation through (i, v[i]), i = 0..n-1
Poly interpolate_integer_points(const std::vector<CycloNum>& v) {
    std::size_t n = v.size();
    std::vector<CycloNum> dd = v;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / CycloNum(long(k));
            if (i == k) break;
        }
    Poly r;
    for (std::size_t k = n; k-- > 0;) {
        r = r * Poly(std::vector<CycloNum>{CycloNum(-long(k)), CycloNum(1)}) + Poly(dd[k]);
    }
    return r;
}

std::optional<long> shift_dispersion(const Poly& p, const Poly& r, long step) {
    std::size_t D = std::size_t(p.degree() * r.degree());
    std::vector<CycloNum> vals;
    for (std::size_t y = 0; y <= D; ++y) vals.push_back(resultant(p, substitute_shift(r, CycloNum(long(y)))));
    Poly R = interpolate_integer_points(vals);
    if (R.is_zero()) throw Error(ErrorCode::InvalidArgument, "dispersion: resultant vanishes identically");
    unsigned N = R.conductor();
    std::optional<std::set<long>> common;
    for (const Poly& comp : rational_components(R, N)) {
        if (comp.is_zero()) continue;
        auto roots = integer_roots(comp);
        if (!common) {
            common = roots;
        } else {
            std::set<long> keep;
            for (long v : roots)
                if (common->count(v)) keep.insert(v);
            common = keep;
        }
    }
    std::optional<long> best;
    for (long y : *common) {
        if (y % step != 0) continue;
        long j = y / step;
        if (j < 0) continue;
        if (poly_gcd(p, substitute_shift(r, CycloNum(y))).degree() <= 0) continue;
        if (!best || j > *best) best = j;
    }
    return best;
}

double cauchy_log_bound(const Poly& p, unsigned m, unsigned k, bool reciprocal) {
    const auto& c = p.coeffs();
    double lead = std::abs(c[reciprocal ? 0 : c.size() - 1].galois(m, k).to_complex());
    double mx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == (reciprocal ? 0 : c.size() - 1)) continue;
        mx = std::max(mx, std::abs(c[i].galois(m, k).to_complex()) / lead);
    }
    return std::log(1.0 + mx);
}

std::optional<long> q_dispersion(const Poly& p0, const Poly& r0, const CycloNum& q) {
    // the root 0 is fixed by every power of sigma and is excluded
    Poly p = p0.drop_x(p0.x_valuation()), r = r0.drop_x(r0.x_valuation());
    if (p.degree() < 1 || r.degree() < 1) return std::nullopt;
    unsigned m = lcm_u(lcm_u(p.conductor(), r.conductor()), q.conductor());
    unsigned kbest = 1;
    double lq = 0;
    for (unsigned k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        double l = std::abs(std::log(std::abs(q.galois(m, k).to_complex())));
        if (l > lq) {
            lq = l;
            kbest = k;
        }
    }
    long jmax = 64;
    if (lq > 1e-9) {
        // |q^j| = |beta / alpha| with beta a root of r and alpha a root of p
        double span = cauchy_log_bound(r, m, kbest, false) + cauchy_log_bound(p, m, kbest, true);
        double span2 = cauchy_log_bound(r, m, kbest, true) + cauchy_log_bound(p, m, kbest, false);
        jmax = long(std::ceil(std::max(span, span2) / lq)) + 1;
    }
    Poly rj = substitute_scale(r, q.pow(jmax));
    CycloNum qinv = q.inverse();
    for (long j = jmax; j >= 0; --j) {
        if (poly_gcd(p, rj).degree() > 0) return j;
        rj = substitute_scale(rj, qinv);
    }
    return std::nullopt;
}

}  // namespace

std::optional<long> dispersion(const Poly& p, const Poly& r, const SigmaSpec& sigma) {
    if (p.is_zero() || r.is_zero()) throw Error(ErrorCode::ZeroInput, "dispersion of a zero polynomial");
    if (p.degree() < 1 || r.degree() < 1) return std::nullopt;
    if (sigma.is_shift()) return shift_dispersion(p, r, sigma.step);
    return q_dispersion(p, r, sigma.q);
}

}  // namespace pvkit
