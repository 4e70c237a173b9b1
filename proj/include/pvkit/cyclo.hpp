#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pvkit {

using BigInt = mpz_class;
using BigRational = mpq_class;

unsigned euler_phi(unsigned n);
unsigned lcm_u(unsigned a, unsigned b);
// integer coefficients of the n-th cyclotomic polynomial, low to high
const std::vector<BigInt>& cyclotomic_poly(unsigned n);

// element of Q(zeta_N), stored as a polynomial in zeta_N of degree < phi(N).
// Values are kept at their minimal conductor, so equal numbers are equal structurally.
class CycloNum {
public:
    CycloNum() : n_(1), c_{BigRational(0)} {}
    CycloNum(long v) : n_(1), c_{BigRational(v)} {}
    CycloNum(const BigRational& v) : n_(1), c_{v} { c_[0].canonicalize(); }
    CycloNum(unsigned conductor, std::vector<BigRational> coeffs);

    static CycloNum zeta(unsigned n);
    static CycloNum zeta_pow(unsigned n, long k);

    unsigned conductor() const { return n_; }
    const std::vector<BigRational>& coeffs() const { return c_; }

    bool is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }
    bool is_one() const { return n_ == 1 && c_[0] == 1; }
    bool is_rational() const { return n_ == 1; }
    const BigRational& rational() const;  // throws unless rational

    // coefficient vector after embedding into Q(zeta_m); m must be a multiple of the conductor
    std::vector<BigRational> lifted(unsigned m) const;
    CycloNum inverse() const;
    CycloNum pow(long e) const;
    // image under zeta -> zeta^k of the ambient field Q(zeta_m), gcd(k, m) = 1
    CycloNum galois(unsigned m, unsigned k) const;
    std::complex<double> to_complex() const;

    std::string to_string() const;

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a);
    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

private:
    void normalize();
    unsigned n_;
    std::vector<BigRational> c_;
};

inline bool is_zero(const CycloNum& v) { return v.is_zero(); }

// root-of-unity test: true iff some power v^k with k <= lcm(2, conductor) equals one
bool is_root_of_unity(const CycloNum& v);
// order of v as a root of unity, 0 if v is not one
unsigned root_of_unity_order(const CycloNum& v);
// all k-th roots of v inside Q(zeta_m) among r*zeta_m^j with r rational (enough for the constants we meet)
std::vector<CycloNum> kth_roots(const CycloNum& v, unsigned k, unsigned m);
// rational k-th root when it exists
bool rational_root(const BigRational& v, unsigned k, BigRational& out);
// integer e with q^e = c, searched through complex magnitudes and a bounded window
bool discrete_log(const CycloNum& q, const CycloNum& c, long& out, long window = 256);

}  // namespace pvkit
