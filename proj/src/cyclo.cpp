#include "pvkit/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "pvkit/errors.hpp"
#include "pvkit/linalg.hpp"

namespace pvkit {

namespace {

using QPoly = std::vector<BigRational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// p mod Phi_m, padded to length phi(m)
QPoly reduce_mod(unsigned m, QPoly p) {
    const auto& phi = cyclotomic_poly(m);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (sgn(p[i]) == 0) continue;
        BigRational c = p[i];
        for (std::size_t k = 0; k <= d; ++k) p[i - d + k] -= c * phi[k];
    }
    p.resize(d, BigRational(0));
    return p;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    trim(a);
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, BigRational(0));
    std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        if (sgn(a[i]) == 0) continue;
        BigRational c = a[i] / b.back();
        std::size_t sh = i - db;
        q[sh] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[sh + k] -= c * b[k];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

QPoly galois_raw(unsigned m, const QPoly& v, unsigned k) {
    QPoly p(m, BigRational(0));
    for (std::size_t i = 0; i < v.size(); ++i) p[(i * k) % m] += v[i];
    return reduce_mod(m, std::move(p));
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

const std::vector<BigInt>& cyclotomic_poly(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<BigInt> p(n + 1, BigInt(0));
    p[0] = -1;
    p[n] = 1;
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        const auto& f = cyclotomic_poly(d);
        std::size_t df = f.size() - 1;
        std::vector<BigInt> q(p.size() - df, BigInt(0));
        for (std::size_t i = p.size(); i-- > df;) {
            BigInt c = p[i];
            q[i - df] = c;
            for (std::size_t k = 0; k <= df; ++k) p[i - df + k] -= c * f[k];
        }
        p = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

CycloNum::CycloNum(unsigned conductor, std::vector<BigRational> coeffs) : n_(conductor) {
    if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    c_ = reduce_mod(conductor, std::move(coeffs));
    normalize();
}

void CycloNum::normalize() {
    for (auto& v : c_) v.canonicalize();
    bool rational = true;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) rational = false;
    if (rational) {
        BigRational v = c_.empty() ? BigRational(0) : c_[0];
        n_ = 1;
        c_ = {v};
        return;
    }
    // look for the smallest subfield Q(zeta_d) that contains the value
    for (unsigned d : divisors(n_)) {
        if (d == 1 || d == n_ || d % 4 == 2) continue;
        bool fixed = true;
        for (unsigned k = d + 1; k < n_ && fixed; k += d) {
            if (std::gcd(k, n_) != 1) continue;
            if (galois_raw(n_, c_, k) != c_) fixed = false;
        }
        if (!fixed) continue;
        unsigned pd = euler_phi(d), pn = euler_phi(n_);
        Matrix<BigRational> A(pn, pd);
        for (unsigned i = 0; i < pd; ++i) {
            QPoly e(n_, BigRational(0));
            e[(i * (n_ / d)) % n_] = 1;
            e = reduce_mod(n_, e);
            for (unsigned r = 0; r < pn; ++r) A(r, i) = e[r];
        }
        auto sol = solve_linear(A, c_);
        if (!sol) continue;
        n_ = d;
        c_ = std::move(*sol);
        return;
    }
}

CycloNum CycloNum::zeta(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "zeta(0) is undefined");
    if (n == 1) return CycloNum(1);
    if (n == 2) return CycloNum(-1);
    if (n % 4 == 2) {
        // zeta_n = -zeta_{n/2}^k with 2k = 1 - n/2 mod n/2
        long h = n / 2;
        long k = ((1 - h) / 2) % h;
        if (k < 0) k += h;
        return -zeta(h).pow(k);
    }
    std::vector<BigRational> c(euler_phi(n), BigRational(0));
    c[1] = 1;
    return CycloNum(n, std::move(c));
}

CycloNum CycloNum::zeta_pow(unsigned n, long k) { return zeta(n).pow(k); }

const BigRational& CycloNum::rational() const {
    if (n_ != 1) throw Error(ErrorCode::NonRationalCoefficients, "value " + to_string() + " is not rational");
    return c_[0];
}

std::vector<BigRational> CycloNum::lifted(unsigned m) const {
    if (m % n_ != 0) throw Error(ErrorCode::InvalidArgument, "cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
    if (m == n_) return c_;
    unsigned step = m / n_;
    QPoly p((c_.size() - 1) * step + 1, BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    return reduce_mod(m, std::move(p));
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    if (a.n_ == 1 && b.n_ == 1) return CycloNum(a.c_[0] + b.c_[0]);
    unsigned m = lcm_u(a.n_, b.n_);
    auto x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return CycloNum(m, std::move(x));
}

CycloNum operator-(const CycloNum& a) {
    CycloNum r = a;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.n_ == 1 && b.n_ == 1) return CycloNum(a.c_[0] * b.c_[0]);
    if (a.n_ == 1 || b.n_ == 1) {
        const CycloNum& s = a.n_ == 1 ? a : b;
        CycloNum r = a.n_ == 1 ? b : a;
        if (sgn(s.c_[0]) == 0) return CycloNum(0);
        for (auto& v : r.c_) v *= s.c_[0];
        return r;
    }
    unsigned m = lcm_u(a.n_, b.n_);
    return CycloNum(m, mul(a.lifted(m), b.lifted(m)));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "inverse of zero");
    if (n_ == 1) return CycloNum(BigRational(1) / c_[0]);
    QPoly phi;
    for (const auto& v : cyclotomic_poly(n_)) phi.emplace_back(v);
    QPoly r0 = phi, r1 = c_;
    trim(r1);
    QPoly s0, s1{BigRational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    BigRational g = r0[0];
    for (auto& v : s0) v /= g;
    return CycloNum(n_, reduce_mod(n_, s0));
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum base = *this, r(1);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

CycloNum CycloNum::galois(unsigned m, unsigned k) const {
    return CycloNum(m, galois_raw(m, lifted(m), k));
}

std::complex<double> CycloNum::to_complex() const {
    std::complex<double> z(0, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        z += c_[i].get_d() * std::polar(1.0, 2.0 * M_PI * double(i) / double(n_));
    return z;
}

std::string CycloNum::to_string() const {
    if (n_ == 1) return c_[0].get_str();
    std::string out;
    std::string z = "zeta(" + std::to_string(n_) + ")";
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigRational& v = c_[i];
        if (sgn(v) == 0) continue;
        BigRational av = abs(v);
        std::string mono = i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i));
        std::string term;
        if (mono.empty()) term = av.get_str();
        else if (av == 1) term = mono;
        else term = av.get_str() + "*" + mono;
        if (out.empty()) out = sgn(v) < 0 ? "-" + term : term;
        else out += (sgn(v) < 0 ? " - " : " + ") + term;
    }
    return out;
}

bool is_root_of_unity(const CycloNum& v) { return root_of_unity_order(v) != 0; }

unsigned root_of_unity_order(const CycloNum& v) {
    if (v.is_zero()) return 0;
    unsigned m = lcm_u(2, v.conductor());
    if (!v.pow(m).is_one()) return 0;
    for (unsigned d : divisors(m))
        if (v.pow(d).is_one()) return d;
    return m;
}

bool rational_root(const BigRational& v, unsigned k, BigRational& out) {
    if (k == 0) return false;
    if (sgn(v) == 0) {
        out = 0;
        return true;
    }
    if (sgn(v) < 0 && k % 2 == 0) return false;
    BigInt num = abs(v.get_num()), den = v.get_den();
    BigInt rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return false;
    out = BigRational(rn, rd);
    out.canonicalize();
    if (sgn(v) < 0) out = -out;
    return true;
}

std::vector<CycloNum> kth_roots(const CycloNum& v, unsigned k, unsigned m) {
    std::vector<CycloNum> out;
    if (k == 0) return out;
    if (v.is_zero()) return {CycloNum(0)};
    unsigned M = lcm_u(lcm_u(2, m), v.conductor());
    CycloNum z = CycloNum::zeta(M);
    for (unsigned j = 0; j < M; ++j) {
        CycloNum w = z.pow(j);
        CycloNum t = v / w.pow(k);
        if (!t.is_rational()) continue;
        BigRational r;
        if (!rational_root(t.rational(), k, r)) continue;
        CycloNum c = CycloNum(r) * w;
        if (m % c.conductor() != 0) continue;
        bool seen = false;
        for (const auto& o : out)
            if (o == c) seen = true;
        if (!seen) out.push_back(c);
    }
    return out;
}

bool discrete_log(const CycloNum& q, const CycloNum& c, long& out, long window) {
    if (c.is_zero() || q.is_zero()) return false;
    if (c.is_one()) {
        out = 0;
        return true;
    }
    unsigned m = lcm_u(q.conductor(), c.conductor());
    double best = 0;
    std::complex<double> qe, ce;
    for (unsigned k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        auto qq = q.galois(m, k).to_complex();
        double lq = std::abs(std::log(std::abs(qq)));
        if (lq > best) {
            best = lq;
            qe = qq;
            ce = c.galois(m, k).to_complex();
        }
    }
    if (best > 1e-9) {
        double est = std::log(std::abs(ce)) / std::log(std::abs(qe));
        if (!std::isfinite(est) || std::abs(est) > 1e6) return false;
        long e0 = std::lround(est);
        for (long e = e0 - 1; e <= e0 + 1; ++e) {
            if (q.pow(e) == c) {
                out = e;
                return true;
            }
        }
        return false;
    }
    for (long e = 1; e <= window; ++e) {
        if (q.pow(e) == c) {
            out = e;
            return true;
        }
        if (q.pow(-e) == c) {
            out = -e;
            return true;
        }
    }
    return false;
}

}  // namespace pvkit
