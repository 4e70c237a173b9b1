#pragma once

#include <optional>
#include <string>

#include "pvkit/ratfunc.hpp"

namespace pvkit {

// x -> x + step (shift) or x -> q x (q-shift); step > 1 only appears for powers of the shift
struct SigmaSpec {
    enum class Kind { Shift, QShift };
    Kind kind = Kind::Shift;
    CycloNum q = CycloNum(1);
    long step = 1;

    static SigmaSpec shift() { return SigmaSpec(); }
    static SigmaSpec qshift(const CycloNum& q);  // validates q

    bool is_shift() const { return kind == Kind::Shift; }
    // sigma^j as an operator (j != 0)
    SigmaSpec power(long j) const;
    std::string to_string() const;
    friend bool operator==(const SigmaSpec& a, const SigmaSpec& b) {
        return a.kind == b.kind && a.q == b.q && a.step == b.step;
    }
};

// k = Q(zeta_N)(x) with sigma fixing the constants
struct DiffField {
    SigmaSpec sigma;
    unsigned constants_conductor = 1;

    DiffField() = default;
    DiffField(SigmaSpec s, unsigned n = 1);
    // the field with sigma replaced by sigma^j
    DiffField power(long j) const;
};

Poly sigma_poly(const SigmaSpec& s, const Poly& p, long j = 1);
RatFunc sigma_rat(const SigmaSpec& s, const RatFunc& f, long j = 1);

RatFunc apply_sigma(const DiffField& k, const RatFunc& f);
RatFunc apply_sigma_power(const DiffField& k, const RatFunc& f, long j);
bool is_constant(const DiffField& k, const RatFunc& f);
// sigma^{n-1}(a) ... sigma(a) a
RatFunc sigma_product(const DiffField& k, const RatFunc& a, long n);

std::optional<long> dispersion(const Poly& p, const Poly& r, const SigmaSpec& sigma);

}  // namespace pvkit
