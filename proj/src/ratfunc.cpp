#include "pvkit/ratfunc.hpp"

#include "pvkit/errors.hpp"

namespace pvkit {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = exact_div(num, g), d = exact_div(den, g);
    CycloNum inv = d.lc().inverse();
    num_ = inv * n;
    den_ = inv * d;
}

CycloNum RatFunc::constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::NotConstant, to_string() + " is not constant");
    return num_.coeff(0);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(unsigned(e));
    r.den_ = den_.pow(unsigned(e));
    return r;
}

RatFunc RatFunc::normalized() const {
    if (is_zero()) return *this;
    RatFunc r = *this;
    r.num_ = num_.lc().inverse() * num_;
    return r;
}

CycloNum RatFunc::eval(const CycloNum& v) const {
    CycloNum d = den_.eval(v);
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "evaluation at a pole");
    return num_.eval(v) / d;
}

std::string RatFunc::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    auto wrap = [](const Poly& p) {
        std::size_t terms = 0;
        for (const auto& c : p.coeffs())
            if (!c.is_zero()) ++terms;
        std::string s = p.to_string();
        return terms > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

}  // namespace pvkit
