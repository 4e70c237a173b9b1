#include "pvkit/sigma.hpp"

#include "pvkit/errors.hpp"

namespace pvkit {

SigmaSpec SigmaSpec::qshift(const CycloNum& q) {
    if (q.is_zero()) throw Error(ErrorCode::ZeroScale, "q must be nonzero");
    if (is_root_of_unity(q)) throw Error(ErrorCode::InvalidArgument, "q = " + q.to_string() + " is a root of unity");
    SigmaSpec s;
    s.kind = Kind::QShift;
    s.q = q;
    return s;
}

SigmaSpec SigmaSpec::power(long j) const {
    if (j == 0) throw Error(ErrorCode::InvalidArgument, "sigma^0 is not an automorphism of interest");
    SigmaSpec s = *this;
    if (kind == Kind::Shift) s.step = step * j;
    else s.q = q.pow(j);
    return s;
}

std::string SigmaSpec::to_string() const {
    if (kind == Kind::Shift) return step == 1 ? "shift" : "shift(" + std::to_string(step) + ")";
    return "qshift(" + q.to_string() + ")";
}

DiffField::DiffField(SigmaSpec s, unsigned n) : sigma(std::move(s)), constants_conductor(n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    if (!sigma.is_shift()) constants_conductor = lcm_u(constants_conductor, sigma.q.conductor());
}

DiffField DiffField::power(long j) const {
    DiffField k = *this;
    k.sigma = sigma.power(j);
    return k;
}

Poly sigma_poly(const SigmaSpec& s, const Poly& p, long j) {
    if (j == 0) return p;
    if (s.is_shift()) return substitute_shift(p, CycloNum(s.step * j));
    return substitute_scale(p, s.q.pow(j));
}

RatFunc sigma_rat(const SigmaSpec& s, const RatFunc& f, long j) {
    if (j == 0 || f.is_constant()) return f;
    return RatFunc(sigma_poly(s, f.num(), j), sigma_poly(s, f.den(), j));
}

RatFunc apply_sigma(const DiffField& k, const RatFunc& f) { return sigma_rat(k.sigma, f, 1); }

RatFunc apply_sigma_power(const DiffField& k, const RatFunc& f, long j) { return sigma_rat(k.sigma, f, j); }

bool is_constant(const DiffField&, const RatFunc& f) { return f.is_constant(); }

RatFunc sigma_product(const DiffField& k, const RatFunc& a, long n) {
    RatFunc r(1);
    for (long i = 0; i < n; ++i) r = r * apply_sigma_power(k, a, i);
    return r;
}

}  // namespace pvkit
