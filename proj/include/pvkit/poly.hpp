#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pvkit/cyclo.hpp"

namespace pvkit {

// dense univariate polynomial in x over Q(zeta_N), low to high, no trailing zeros
class Poly {
public:
    Poly() = default;
    Poly(const CycloNum& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(long c) : Poly(CycloNum(c)) {}
    explicit Poly(std::vector<CycloNum> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<CycloNum>{CycloNum(0), CycloNum(1)}); }
    static Poly monomial(const CycloNum& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return long(c_.size()) - 1; }  // -1 for zero
    const std::vector<CycloNum>& coeffs() const { return c_; }
    CycloNum coeff(std::size_t k) const { return k < c_.size() ? c_[k] : CycloNum(0); }
    CycloNum lc() const { return c_.empty() ? CycloNum(0) : c_.back(); }
    unsigned conductor() const;  // lcm of coefficient conductors
    bool is_rational() const { return conductor() == 1; }
    // multiplicity of the root 0
    std::size_t x_valuation() const;

    Poly monic() const;
    CycloNum eval(const CycloNum& v) const;
    Poly pow(unsigned e) const;
    Poly derivative() const;
    Poly shifted_x(std::size_t k) const;  // multiply by x^k
    Poly drop_x(std::size_t k) const;     // divide by x^k (exact)

    std::string to_string(const std::string& var = "x") const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const CycloNum& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<CycloNum> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// a / b when the division is exact; throws otherwise
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly poly_gcd(const Poly& a, const Poly& b);
// p(x + c)
Poly substitute_shift(const Poly& p, const CycloNum& c);
// p(q x)
Poly substitute_scale(const Poly& p, const CycloNum& q);
// Sylvester determinant with the coefficients of a in the top rows
CycloNum resultant(const Poly& a, const Poly& b);
std::set<long> integer_roots(const Poly& p);

// splits a polynomial with cyclotomic coefficients into rational components: p = sum_i comp_i * zeta^i
std::vector<Poly> rational_components(const Poly& p, unsigned conductor);

}  // namespace pvkit
