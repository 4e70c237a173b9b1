#pragma once

#include <string>

#include "pvkit/poly.hpp"

namespace pvkit {

// reduced fraction num/den with monic den
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const CycloNum& c) : num_(c), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == Poly(1); }
    bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
    CycloNum constant_value() const;  // throws unless constant
    bool is_polynomial() const { return den_.degree() == 0; }
    // leading coefficient ratio at infinity
    CycloNum lc() const { return num_.lc(); }
    long degree_at_infinity() const { return num_.degree() - den_.degree(); }
    // order of vanishing at x = 0 (negative for a pole)
    long x_valuation() const { return long(num_.x_valuation()) - long(den_.x_valuation()); }
    unsigned conductor() const { return lcm_u(num_.conductor(), den_.conductor()); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;
    // normalized so the leading numerator coefficient is 1
    RatFunc normalized() const;
    CycloNum eval(const CycloNum& v) const;  // throws at a pole

    std::string to_string() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

private:
    Poly num_, den_;
};

inline bool is_zero(const RatFunc& v) { return v.is_zero(); }

}  // namespace pvkit
