#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pvkit/errors.hpp"
#include "pvkit/rational_solve.hpp"

using namespace pvkit;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<CycloNum> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

DiffField shift() { return DiffField(SigmaSpec::shift()); }
DiffField qshift(long q) { return DiffField(SigmaSpec::qshift(CycloNum(q))); }

// largest j in [0, 60] with gcd(p, sigma^j r) nontrivial, by direct search
std::optional<long> brute_dispersion(const Poly& p, const Poly& r, const SigmaSpec& s) {
    std::optional<long> best;
    for (long j = 0; j <= 60; ++j)
        if (poly_gcd(p, sigma_poly(s, r, j)).degree() > 0) best = j;
    return best;
}

}  // namespace

TEST_CASE("q must not be zero or a root of unity") {
    CHECK_THROWS(SigmaSpec::qshift(CycloNum(0)));
    CHECK_THROWS(SigmaSpec::qshift(CycloNum(-1)));
    CHECK_THROWS(SigmaSpec::qshift(CycloNum::zeta(3)));
    CHECK_NOTHROW(SigmaSpec::qshift(CycloNum(2)));
}

TEST_CASE("sigma on rational functions") {
    RatFunc f(P({1}), P({0, 1}));
    CHECK(apply_sigma(shift(), f) == RatFunc(P({1}), P({1, 1})));
    CHECK(apply_sigma(qshift(3), RatFunc::x()) == RatFunc(P({0, 3})));
    CHECK(sigma_product(shift(), RatFunc::x(), 3) == RatFunc(P({0, 1}) * P({1, 1}) * P({2, 1})));
    CHECK(apply_sigma_power(shift(), f, -2) == RatFunc(P({1}), P({-2, 1})));
}

TEST_CASE("dispersion examples") {
    CHECK(dispersion(P({0, 1}), P({0, 1}), SigmaSpec::shift()) == 0);
    CHECK(dispersion(P({3, 1}), P({0, 1}), SigmaSpec::shift()) == 3);
    CHECK_FALSE(dispersion(P({1, 1}), P({3, 1}), SigmaSpec::shift()));
    // q = 2: p = x - 4, r = x - 1 gives p(x) and r(2^j x) sharing a root only for j < 0
    auto q2 = SigmaSpec::qshift(CycloNum(2));
    CHECK_FALSE(dispersion(P({-4, 1}), P({-1, 1}), q2));
    CHECK(dispersion(P({-1, 1}), P({-4, 1}), q2) == 2);
}

TEST_CASE("dispersion agrees with direct gcd search") {
    std::mt19937 rng(17);
    for (auto s : {SigmaSpec::shift(), SigmaSpec::qshift(CycloNum(2)), SigmaSpec::qshift(CycloNum(-3))}) {
        for (int t = 0; t < 25; ++t) {
            Poly p = oracle::linear_product(rng, 2, -8, 8), r = oracle::linear_product(rng, 2, -8, 8);
            if (!s.is_shift()) {
                p = oracle::random_poly(rng, 2, -6, 6, true);
                r = oracle::random_poly(rng, 1, -6, 6, true) * oracle::linear_product(rng, 1, -8, 8);
                if (p.x_valuation() || r.x_valuation()) continue;
            }
            CHECK(dispersion(p, r, s) == brute_dispersion(p, r, s));
        }
    }
}

TEST_CASE("solve_mult examples") {
    auto s = solve_mult(shift(), RatFunc(P({1, 1}), P({0, 1})));
    REQUIRE(s);
    CHECK(s->witness == RatFunc::x());
    CHECK_FALSE(solve_mult(shift(), RatFunc::x()));
    CHECK_FALSE(solve_mult(shift(), RatFunc(-1)));
    auto q = solve_mult(qshift(2), RatFunc(4));
    REQUIRE(q);
    CHECK(q->witness == RatFunc(P({0, 0, 1})));
    CHECK_THROWS(solve_mult(shift(), RatFunc(0)));
}

TEST_CASE("solve_add examples") {
    auto f = solve_add(shift(), RatFunc(1));
    REQUIRE(f);
    CHECK(apply_sigma(shift(), *f) - *f == RatFunc(1));
    CHECK_FALSE(solve_add(qshift(2), RatFunc(1)));  // q-logarithm
    CHECK_FALSE(solve_add(shift(), RatFunc(P({1}), P({0, 1}))));  // digamma
    auto g = solve_add(shift(), RatFunc(P({1}), P({0, 1, 1})));
    REQUIRE(g);
    CHECK(*g == RatFunc(P({-1}), P({0, 1})));
}

TEST_CASE("solvers agree with the interpolation oracle") {
    for (const auto& [k, r] : oracle::mult_corpus(4242, 40)) {
        auto s = solve_mult(k, r);
        CHECK(bool(s) == bool(oracle::mult(k, r)));
        if (s) CHECK(apply_sigma(k, s->witness) == r * s->witness);
    }
    for (const auto& [k, b] : oracle::add_corpus(2424, 40)) {
        auto s = solve_add(k, b);
        CHECK(bool(s) == bool(oracle::add(k, b)));
        if (s) CHECK(apply_sigma(k, *s) - *s == b);
    }
}

TEST_CASE("universal denominator is divisible by every solution denominator") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        Poly d = oracle::linear_product(rng, 2, -3, 3);
        RatFunc g(P({1}), d);
        RatFunc r = apply_sigma(shift(), g) / g;
        Poly U = mult_universal_denominator(SigmaSpec::shift(), r.num(), r.den());
        CHECK(divides(g.den(), U));
    }
}

TEST_CASE("torsion order") {
    auto t = torsion_order(shift(), RatFunc(-1), 12);
    REQUIRE(t);
    CHECK(t->order == 2);
    auto c = torsion_order(qshift(2), RatFunc(-2), 12);
    REQUIRE(c);
    CHECK(c->order == 2);
    CHECK(c->witness == RatFunc(P({0, 0, 1})));
    CHECK_FALSE(torsion_order(shift(), RatFunc::x(), 12));
    Budget b{3};
    CHECK_THROWS_AS(torsion_order(shift(), RatFunc::x(), 12, &b), Error);
}

TEST_CASE("relation lattice") {
    auto L = relation_lattice(shift(), {RatFunc(-1), RatFunc(P({-1, -1}), P({0, 1}))}, 12);
    REQUIRE(L.rows.size() == 2);
    CHECK(L.rows[0].exps == IVec{1, -1});
    CHECK(L.rows[0].witness == RatFunc(P({1}), P({0, 1})));
    CHECK(L.rows[1].exps == IVec{2, 0});
    CHECK(L.rows[1].witness == RatFunc(1));
    for (const auto& row : L.rows) {
        RatFunc a = power_product({RatFunc(-1), RatFunc(P({-1, -1}), P({0, 1}))}, row.exps);
        CHECK(apply_sigma(shift(), row.witness) == a * row.witness);
    }
    CHECK_THROWS_AS(relation_lattice(shift(), {RatFunc(1), RatFunc(1), RatFunc(1), RatFunc(1)}, 3), Error);
}

TEST_CASE("sigma is a field automorphism") {
    std::mt19937 rng(53);
    for (const DiffField& k : {shift(), qshift(3), DiffField(SigmaSpec::qshift(CycloNum(BigRational(-1, 2))))}) {
        for (int t = 0; t < 15; ++t) {
            RatFunc f(oracle::random_poly(rng, t % 3, -3, 3, false), oracle::random_poly(rng, t % 2, -3, 3, true));
            RatFunc g(oracle::random_poly(rng, 2, -3, 3, false), oracle::random_poly(rng, 1, -3, 3, true));
            CHECK(apply_sigma(k, f + g) == apply_sigma(k, f) + apply_sigma(k, g));
            CHECK(apply_sigma(k, f * g) == apply_sigma(k, f) * apply_sigma(k, g));
            if (!f.is_zero()) CHECK(apply_sigma(k, f.inverse()) == apply_sigma(k, f).inverse());
            for (long j : {1L, 2L, 5L}) CHECK(apply_sigma_power(k, apply_sigma_power(k, f, j), -j) == f);
            CHECK(is_constant(k, f) == (apply_sigma(k, f) == f));
            CHECK(is_constant(k, f) == f.is_constant());
        }
    }
}

TEST_CASE("torsion order is minimal") {
    DiffField k4(SigmaSpec::shift(), 4), k3(SigmaSpec::shift(), 3);
    std::vector<std::pair<DiffField, RatFunc>> cases{{shift(), RatFunc(-1)},
                                                     {k4, RatFunc(CycloNum::zeta(4))},
                                                     {k3, RatFunc(CycloNum::zeta(3)) * RatFunc(P({1, 1}), P({0, 1}))},
                                                     {qshift(2), RatFunc(-2)},
                                                     {qshift(4), RatFunc(-2)}};
    for (const auto& [k, a] : cases) {
        auto t = torsion_order(k, a, 12);
        REQUIRE(t);
        CHECK(apply_sigma(k, t->witness) == a.pow(t->order) * t->witness);
        for (long j = 1; j < t->order; ++j) CHECK_FALSE(solve_mult(k, a.pow(j)));
    }
}

TEST_CASE("relation rows add up with multiplied witnesses") {
    std::vector<std::pair<DiffField, std::vector<RatFunc>>> cases{
        {shift(), {RatFunc(-1), RatFunc(P({-1, -1}), P({0, 1}))}},
        {shift(), {RatFunc(-1), RatFunc(-1), RatFunc::x()}},
        {qshift(2), {RatFunc(2), RatFunc(-4), RatFunc(P({0, 1}))}}};
    for (const auto& [k, a] : cases) {
        auto L = relation_lattice(k, a, 12);
        for (const auto& r1 : L.rows)
            for (const auto& r2 : L.rows) {
                IVec e(a.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = r1.exps[i] + r2.exps[i];
                RatFunc g = r1.witness * r2.witness;
                CHECK(apply_sigma(k, g) == power_product(a, e) * g);
            }
    }
}
