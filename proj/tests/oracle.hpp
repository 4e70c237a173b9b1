#pragma once

// Reference computations used to check the library against something it does not share code with:
// orbit evaluation plus dense rational interpolation, and brute-force corpora.

#include <optional>
#include <random>
#include <vector>

#include "pvkit/linalg.hpp"
#include "pvkit/rational_solve.hpp"

namespace oracle {

using pvkit::BigRational;
using pvkit::CycloNum;
using pvkit::DiffField;
using pvkit::Poly;
using pvkit::RatFunc;

inline BigRational eval_q(const RatFunc& f, const BigRational& x) {
    auto ev = [&](const Poly& p) {
        BigRational acc = 0;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].rational();
        return acc;
    };
    BigRational d = ev(f.den());
    if (sgn(d) == 0) throw std::domain_error("pole");
    BigRational r = ev(f.num()) / d;
    r.canonicalize();
    return r;
}

inline BigRational step(const DiffField& k, const BigRational& x) {
    if (k.sigma.is_shift()) return x + BigRational(k.sigma.step);
    return x * k.sigma.q.rational();
}

// points x0, sigma(x0), sigma^2(x0), ...
inline std::vector<BigRational> orbit(const DiffField& k, const BigRational& x0, std::size_t n) {
    std::vector<BigRational> xs{x0};
    while (xs.size() < n) xs.push_back(step(k, xs.back()));
    return xs;
}

// P/Q with deg P, deg Q <= D through the points (xs[i], vs[i]); nullopt when only P = Q = 0 fits
inline std::optional<RatFunc> interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& vs, int D) {
    std::size_t u = std::size_t(2 * D + 2);
    pvkit::Matrix<BigRational> M(xs.size(), u);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        BigRational pw = 1;
        for (int i = 0; i <= D; ++i) {
            M(k, std::size_t(i)) = pw;
            M(k, std::size_t(D + 1 + i)) = -vs[k] * pw;
            pw *= xs[k];
        }
    }
    auto ns = pvkit::nullspace(M);
    for (const auto& v : ns) {
        std::vector<CycloNum> p, q;
        for (int i = 0; i <= D; ++i) {
            p.emplace_back(v[std::size_t(i)]);
            q.emplace_back(v[std::size_t(D + 1 + i)]);
        }
        Poly Q(q);
        if (Q.is_zero()) continue;
        return RatFunc(Poly(p), Q);
    }
    return std::nullopt;
}

inline const std::vector<BigRational>& starts() {
    static const std::vector<BigRational> s{BigRational(2, 7), BigRational(5, 11), BigRational(3, 13), BigRational(7, 17)};
    return s;
}

// f with sigma(f) = r f and numerator, denominator degree <= D, found without the library solver
inline std::optional<RatFunc> mult(const DiffField& k, const RatFunc& r, int D = 6) {
    std::size_t n = std::size_t(2 * D + 4);
    for (const auto& x0 : starts()) {
        try {
            auto xs = orbit(k, x0, n);
            std::vector<BigRational> vs{BigRational(1)};
            for (std::size_t i = 0; i + 1 < n; ++i) {
                BigRational ri = eval_q(r, xs[i]);
                if (sgn(ri) == 0) throw std::domain_error("zero");
                vs.push_back(vs.back() * ri);
            }
            auto f = interpolate(xs, vs, D);
            if (!f || f->is_zero()) return std::nullopt;
            if (pvkit::apply_sigma(k, *f) == r * *f) return f;
            return std::nullopt;
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("no usable orbit start");
}

// f with sigma(f) - f = b; the solution vanishing at x0 is interpolated
inline std::optional<RatFunc> add(const DiffField& k, const RatFunc& b, int D = 6) {
    std::size_t n = std::size_t(2 * D + 4);
    for (const auto& x0 : starts()) {
        try {
            auto xs = orbit(k, x0, n);
            std::vector<BigRational> vs{BigRational(0)};
            for (std::size_t i = 0; i + 1 < n; ++i) vs.push_back(vs.back() + eval_q(b, xs[i]));
            auto f = interpolate(xs, vs, D);
            if (!f) return std::nullopt;
            if (pvkit::apply_sigma(k, *f) - *f == b) return f;
            return std::nullopt;
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("no usable orbit start");
}

inline Poly random_poly(std::mt19937& rng, int deg, int lo, int hi, bool monic) {
    std::uniform_int_distribution<int> c(lo, hi);
    std::vector<CycloNum> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(long(c(rng)));
    if (monic) v.back() = CycloNum(1);
    else if (v.back().is_zero()) v.back() = CycloNum(1);
    return Poly(v);
}

inline Poly linear_product(std::mt19937& rng, int deg, int lo, int hi) {
    std::uniform_int_distribution<int> c(lo, hi);
    Poly p(1);
    for (int i = 0; i < deg; ++i) p = p * Poly(std::vector<CycloNum>{CycloNum(long(c(rng))), CycloNum(1)});
    return p;
}

struct Case {
    DiffField field;
    RatFunc r;
};

// inputs with numerator and denominator degree <= 3 over both operators: half are built to be
// solvable (r = c sigma(g)/g or b = sigma(g) - g), the rest are random
inline std::vector<Case> mult_corpus(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<DiffField> fields{DiffField(pvkit::SigmaSpec::shift()), DiffField(pvkit::SigmaSpec::qshift(CycloNum(2))),
                                  DiffField(pvkit::SigmaSpec::qshift(CycloNum(BigRational(-1, 3))))};
    std::vector<Case> out;
    std::uniform_int_distribution<int> coin(0, 1), dg(0, 3), pick(0, int(fields.size()) - 1);
    while (out.size() < count) {
        const DiffField& k = fields[std::size_t(pick(rng))];
        if (coin(rng)) {
            int a = std::uniform_int_distribution<int>(0, 3)(rng);
            int b = std::uniform_int_distribution<int>(0, 3 - a)(rng);
            Poly n = k.sigma.is_shift() ? linear_product(rng, a, -1, 1) : linear_product(rng, a, -3, 3);
            Poly d = k.sigma.is_shift() ? linear_product(rng, b, -1, 1) : linear_product(rng, b, -3, 3);
            if (!k.sigma.is_shift() && coin(rng)) n = n * Poly::x();
            RatFunc g(n, d);
            RatFunc r = pvkit::apply_sigma(k, g) / g;
            if (r.num().degree() > 3 || r.den().degree() > 3) continue;
            out.push_back({k, r});
        } else {
            Poly n = random_poly(rng, dg(rng), -3, 3, false);
            Poly d = random_poly(rng, dg(rng), -3, 3, true);
            if (n.is_zero()) continue;
            out.push_back({k, RatFunc(n, d)});
        }
    }
    return out;
}

inline std::vector<Case> add_corpus(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<DiffField> fields{DiffField(pvkit::SigmaSpec::shift()), DiffField(pvkit::SigmaSpec::qshift(CycloNum(2))),
                                  DiffField(pvkit::SigmaSpec::qshift(CycloNum(3)))};
    std::vector<Case> out;
    std::uniform_int_distribution<int> coin(0, 1), dg(0, 2), pick(0, int(fields.size()) - 1);
    while (out.size() < count) {
        const DiffField& k = fields[std::size_t(pick(rng))];
        if (coin(rng)) {
            Poly n = random_poly(rng, dg(rng), -3, 3, false);
            Poly d = linear_product(rng, std::uniform_int_distribution<int>(0, 1)(rng), -2, 2);
            RatFunc g(n, d);
            RatFunc b = pvkit::apply_sigma(k, g) - g;
            if (b.num().degree() > 3 || b.den().degree() > 3) continue;
            out.push_back({k, b});
        } else {
            Poly n = random_poly(rng, dg(rng), -3, 3, false);
            Poly d = random_poly(rng, dg(rng), -3, 3, true);
            out.push_back({k, RatFunc(n, d)});
        }
    }
    return out;
}

}  // namespace oracle
