#include "pvkit/laurent.hpp"

#include "pvkit/errors.hpp"

namespace pvkit {

LaurentPoly::LaurentPoly(std::size_t nvars, const RatFunc& c) : n_(nvars) {
    if (!c.is_zero()) t_.emplace(Exps(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const Exps& e, const RatFunc& c) {
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::var(std::size_t nvars, std::size_t i, long power) {
    Exps e(nvars, 0);
    e[i] = power;
    return monomial(nvars, e);
}

bool LaurentPoly::has_constant_coefficients() const {
    for (const auto& [e, c] : t_)
        if (!c.is_constant()) return false;
    return true;
}

RatFunc LaurentPoly::constant_term() const {
    auto it = t_.find(Exps(n_, 0));
    return it == t_.end() ? RatFunc() : it->second;
}

bool LaurentPoly::is_scalar() const { return t_.empty() || (t_.size() == 1 && is_zero_vec(t_.begin()->first)); }

void LaurentPoly::add_term(const Exps& e, const RatFunc& c) {
    if (c.is_zero()) return;
    if (e.size() != n_) throw Error(ErrorCode::InvalidArgument, "exponent vector has the wrong length");
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly LaurentPoly::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : t_) r.add_term(e, f(c));
    return r;
}

LaurentPoly LaurentPoly::remap(std::size_t nvars, const std::vector<long>& src) const {
    LaurentPoly r(nvars);
    for (const auto& [e, c] : t_) {
        Exps ne(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i)
            if (src[i] >= 0) ne[i] = e[std::size_t(src[i])];
        // dropping a variable with a nonzero exponent would change the polynomial
        long kept = 0, total = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (src[i] >= 0) kept += std::labs(e[std::size_t(src[i])]);
        for (long v : e) total += std::labs(v);
        if (kept != total) throw Error(ErrorCode::InvalidArgument, "remap drops a variable that occurs");
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r(n_, RatFunc(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (images.size() != n_) throw Error(ErrorCode::InvalidArgument, "substitute needs one image per variable");
    std::size_t m = images.empty() ? 0 : images.front().nvars();
    // inverses of monomial images, made on demand
    std::vector<LaurentPoly> inv(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!images[i].is_monomial()) continue;
        const auto& [e, c] = *images[i].terms().begin();
        Exps ne = e;
        for (auto& v : ne) v = -v;
        inv[i] = monomial(m, ne, c.inverse());
    }
    LaurentPoly r(m);
    for (const auto& [e, c] : t_) {
        LaurentPoly term(m, c);
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0) {
                term = term * images[i].pow(unsigned(e[i]));
            } else {
                if (!images[i].is_monomial())
                    throw Error(ErrorCode::InvalidArgument, "negative power of a non-monomial image");
                term = term * inv[i].pow(unsigned(-e[i]));
            }
        }
        r = r + term;
    }
    return r;
}

namespace {

bool negative_lead(const RatFunc& c) {
    const CycloNum& l = c.num().lc();
    return l.is_rational() && sgn(l.rational()) < 0;
}

bool single_term(const RatFunc& c) {
    if (c.den().degree() != 0) return false;
    std::size_t k = 0;
    for (const auto& v : c.num().coeffs())
        if (!v.is_zero()) ++k;
    return k == 1 && c.num().lc().is_rational();
}

}  // namespace

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c0] = *it;
        bool neg = negative_lead(c0);
        RatFunc c = neg ? -c0 : c0;
        std::string mono;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.to_string();
        std::string term;
        if (mono.empty()) {
            term = (single_term(c) || c.is_constant() || out.empty()) ? cs : "(" + cs + ")";
        } else if (c.is_one()) {
            term = mono;
        } else if (single_term(c)) {
            term = cs + "*" + mono;
        } else {
            term = "(" + cs + ")*" + mono;
        }
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_ && !a.t_.empty() && !b.t_.empty())
        throw Error(ErrorCode::InvalidArgument, "adding polynomials over different variable sets");
    LaurentPoly r = a.t_.empty() ? LaurentPoly(b.n_) : a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.n_);
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(std::max(a.n_, b.n_));
    if (a.t_.empty() || b.t_.empty()) return r;
    if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "multiplying polynomials over different variable sets");
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            LaurentPoly::Exps e(a.n_);
            for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly operator*(const RatFunc& c, const LaurentPoly& a) {
    LaurentPoly r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.t_) r.t_.emplace(e, c * v);
    return r;
}

LatticeValue LatticeValue::pow(long e) const {
    IVec nt = t;
    for (auto& v : nt) v *= e;
    return LatticeValue(c.pow(e), nt);
}

bool LatticeValue::is_one() const { return c.is_one() && is_zero_vec(t); }

bool operator==(const LatticeValue& a, const LatticeValue& b) {
    if (a.c != b.c) return false;
    std::size_t n = std::max(a.t.size(), b.t.size());
    for (std::size_t i = 0; i < n; ++i) {
        long x = i < a.t.size() ? a.t[i] : 0, y = i < b.t.size() ? b.t[i] : 0;
        if (x != y) return false;
    }
    return true;
}

LatticeValue operator*(const LatticeValue& a, const LatticeValue& b) {
    IVec t(std::max(a.t.size(), b.t.size()), 0);
    for (std::size_t i = 0; i < a.t.size(); ++i) t[i] += a.t[i];
    for (std::size_t i = 0; i < b.t.size(); ++i) t[i] += b.t[i];
    return LatticeValue(a.c * b.c, t);
}

}  // namespace pvkit
