#include "pvkit/poly.hpp"

#include "pvkit/errors.hpp"
#include "pvkit/linalg.hpp"

namespace pvkit {

Poly Poly::monomial(const CycloNum& c, std::size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<CycloNum> v(k + 1, CycloNum(0));
    v[k] = c;
    return Poly(std::move(v));
}

unsigned Poly::conductor() const {
    unsigned n = 1;
    for (const auto& c : c_) n = lcm_u(n, c.conductor());
    return n;
}

std::size_t Poly::x_valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    CycloNum inv = c_.back().inverse();
    return inv * *this;
}

CycloNum Poly::eval(const CycloNum& v) const {
    CycloNum r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<CycloNum> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = CycloNum(long(i)) * c_[i];
    return Poly(std::move(v));
}

Poly Poly::shifted_x(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<CycloNum> v(k, CycloNum(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::drop_x(std::size_t k) const {
    if (k > x_valuation() && !is_zero()) throw Error(ErrorCode::InvalidArgument, "drop_x: not divisible by x^k");
    if (is_zero()) return *this;
    return Poly(std::vector<CycloNum>(c_.begin() + long(k), c_.end()));
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const CycloNum& c = c_[i];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        bool neg = false;
        std::string cs;
        if (c.is_rational()) {
            neg = sgn(c.rational()) < 0;
            BigRational a = abs(c.rational());
            if (!(a == 1 && !mono.empty())) cs = a.get_str();
        } else {
            cs = "(" + c.to_string() + ")";
        }
        std::string term = cs;
        if (!mono.empty()) term = cs.empty() ? mono : cs + "*" + mono;
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<CycloNum> v(std::max(a.c_.size(), b.c_.size()), CycloNum(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<CycloNum> v(a.c_.size() + b.c_.size() - 1, CycloNum(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const CycloNum& s, const Poly& a) {
    if (s.is_zero()) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c = s * c;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<CycloNum> r = a.coeffs();
    std::vector<CycloNum> q(r.size() - b.coeffs().size() + 1, CycloNum(0));
    CycloNum inv = b.lc().inverse();
    std::size_t db = std::size_t(b.degree());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        CycloNum c = r[i] * inv;
        std::size_t sh = i - db;
        q[sh] = c;
        for (std::size_t k = 0; k <= db; ++k) r[sh + k] -= c * b.coeffs()[k];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = r.monic();
    }
    return r0.monic();
}

Poly substitute_shift(const Poly& p, const CycloNum& c) {
    // Horner: p(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...)
    Poly lin(std::vector<CycloNum>{c, CycloNum(1)});
    Poly r;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * lin + Poly(p.coeffs()[i]);
    return r;
}

Poly substitute_scale(const Poly& p, const CycloNum& q) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroScale, "scale factor q = 0");
    std::vector<CycloNum> v = p.coeffs();
    CycloNum qk(1);
    for (auto& c : v) {
        c = c * qk;
        qk = qk * q;
    }
    return Poly(std::move(v));
}

CycloNum resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "resultant of a zero polynomial");
    std::size_t m = std::size_t(a.degree()), n = std::size_t(b.degree());
    if (m + n == 0) return CycloNum(1);
    std::size_t s = m + n;
    Matrix<CycloNum> S(s, s);
    // n rows of a, then m rows of b; coefficients from the leading one down
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) S(r, r + k) = a.coeffs()[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) S(n + r, r + k) = b.coeffs()[n - k];
    return determinant(S);
}

namespace {

bool is_root(const std::vector<BigInt>& c, const BigInt& v) {
    BigInt r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * v + c[i];
    return r == 0;
}

}  // namespace

std::set<long> integer_roots(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "integer_roots of zero");
    if (!p.is_rational()) throw Error(ErrorCode::NonRationalCoefficients, "integer_roots needs rational coefficients");
    std::set<long> roots;
    std::size_t v = p.x_valuation();
    if (v > 0) roots.insert(0);
    Poly q = p.drop_x(v);
    if (q.degree() < 1) return roots;
    BigInt den = 1;
    for (const auto& c : q.coeffs()) den = lcm(den, BigInt(c.rational().get_den()));
    std::vector<BigInt> ic;
    for (const auto& c : q.coeffs()) {
        BigRational t = c.rational() * den;
        ic.push_back(t.get_num());
    }
    BigInt a0 = abs(ic.front());
    // Cauchy bound limits the candidates
    BigRational bound = 0;
    for (std::size_t i = 0; i + 1 < ic.size(); ++i) {
        BigRational t(abs(ic[i]), abs(ic.back()));
        if (t > bound) bound = t;
    }
    BigRational b1 = bound + 1;
    BigInt B;
    mpz_fdiv_q(B.get_mpz_t(), b1.get_num_mpz_t(), b1.get_den_mpz_t());
    if (a0 < B) B = a0;
    for (BigInt d = 1; d * d <= a0 && d <= B; ++d) {
        if (a0 % d != 0) continue;
        BigInt e = a0 / d;
        for (const BigInt& c : {d, e}) {
            if (c > B || !c.fits_slong_p()) continue;
            if (is_root(ic, c)) roots.insert(c.get_si());
            if (is_root(ic, -c)) roots.insert(-c.get_si());
        }
    }
    return roots;
}

std::vector<Poly> rational_components(const Poly& p, unsigned conductor) {
    std::vector<std::vector<CycloNum>> comp(euler_phi(conductor), std::vector<CycloNum>(p.coeffs().size(), CycloNum(0)));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        auto l = p.coeffs()[k].lifted(conductor);
        for (std::size_t i = 0; i < l.size(); ++i) comp[i][k] = CycloNum(l[i]);
    }
    std::vector<Poly> out;
    for (auto& c : comp) out.emplace_back(std::move(c));
    return out;
}

}  // namespace pvkit
