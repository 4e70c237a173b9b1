#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pvkit/lattice.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

// Laurent polynomial in named variables with coefficients in Q(zeta_N)(x)
class LaurentPoly {
public:
    using Exps = IVec;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : n_(nvars) {}
    LaurentPoly(std::size_t nvars, const RatFunc& c);

    static LaurentPoly monomial(std::size_t nvars, const Exps& e, const RatFunc& c = RatFunc(1));
    static LaurentPoly var(std::size_t nvars, std::size_t i, long power = 1);

    std::size_t nvars() const { return n_; }
    const std::map<Exps, RatFunc>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t support_size() const { return t_.size(); }
    bool is_monomial() const { return t_.size() == 1; }
    // every coefficient is free of x
    bool has_constant_coefficients() const;
    // the coefficient of the exponent vector 0
    RatFunc constant_term() const;
    bool is_scalar() const;  // only the exponent 0 occurs
    // leading term in lexicographic order of exponents
    const std::pair<const Exps, RatFunc>& leading() const { return *t_.rbegin(); }

    void add_term(const Exps& e, const RatFunc& c);
    LaurentPoly map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;
    // widen or narrow the variable set: new index i takes old index src[i] (or 0 when src[i] < 0)
    LaurentPoly remap(std::size_t nvars, const std::vector<long>& src) const;
    LaurentPoly pow(unsigned e) const;
    // substitute images for the variables; negative powers need monomial images
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    std::string to_string(const std::vector<std::string>& names) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const RatFunc& c, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::map<Exps, RatFunc> t_;
};

// a value c * T^t attached to a lattice relation Y^e = c T^t; T are sigma-fixed symbols
struct LatticeValue {
    RatFunc c = RatFunc(1);
    IVec t;

    LatticeValue() = default;
    LatticeValue(RatFunc cc, IVec tt) : c(std::move(cc)), t(std::move(tt)) {}
    LatticeValue pow(long e) const;
    bool is_one() const;
    friend LatticeValue operator*(const LatticeValue& a, const LatticeValue& b);
    friend bool operator==(const LatticeValue& a, const LatticeValue& b);
};

}  // namespace pvkit
