#include "pvkit/groebner.hpp"

#include <algorithm>

#include "pvkit/errors.hpp"

namespace pvkit {

bool grevlex_less(const IVec& a, const IVec& b) {
    long da = 0, db = 0;
    for (long v : a) da += v;
    for (long v : b) db += v;
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

std::pair<IVec, RatFunc> leading_term(const LaurentPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "leading term of zero");
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
        if (grevlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

namespace {

void check_polynomial(const LaurentPoly& f) {
    for (const auto& [e, c] : f.terms())
        for (long v : e)
            if (v < 0) throw Error(ErrorCode::InvalidArgument, "Groebner bases need nonnegative exponents");
}

bool divides_mono(const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

LaurentPoly monic(const LaurentPoly& f) { return leading_term(f).second.inverse() * f; }

LaurentPoly spoly(const LaurentPoly& f, const LaurentPoly& g) {
    auto [ef, cf] = leading_term(f);
    auto [eg, cg] = leading_term(g);
    IVec l(ef.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(ef[i], eg[i]);
    IVec mf(l.size()), mg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        mf[i] = l[i] - ef[i];
        mg[i] = l[i] - eg[i];
    }
    return LaurentPoly::monomial(f.nvars(), mf, cf.inverse()) * f - LaurentPoly::monomial(g.nvars(), mg, cg.inverse()) * g;
}

}  // namespace

LaurentPoly reduce(const LaurentPoly& f, const std::vector<LaurentPoly>& G) {
    LaurentPoly p = f, r(f.nvars());
    std::vector<std::pair<IVec, RatFunc>> lt;
    for (const auto& g : G) lt.push_back(leading_term(g));
    while (!p.is_zero()) {
        auto [e, c] = leading_term(p);
        bool hit = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!divides_mono(lt[i].first, e)) continue;
            IVec m(e.size());
            for (std::size_t k = 0; k < e.size(); ++k) m[k] = e[k] - lt[i].first[k];
            p = p - LaurentPoly::monomial(p.nvars(), m, c / lt[i].second) * G[i];
            hit = true;
            break;
        }
        if (!hit) {
            r.add_term(e, c);
            p.add_term(e, -c);
        }
    }
    return r;
}

std::vector<LaurentPoly> groebner_basis(const std::vector<LaurentPoly>& F) {
    std::vector<LaurentPoly> G;
    for (const auto& f : F) {
        check_polynomial(f);
        if (!f.is_zero()) G.push_back(monic(f));
    }
    if (G.empty()) return G;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        auto ei = leading_term(G[i]).first, ej = leading_term(G[j]).first;
        bool coprime = true;
        for (std::size_t k = 0; k < ei.size(); ++k)
            if (ei[k] > 0 && ej[k] > 0) coprime = false;
        if (coprime) continue;
        LaurentPoly h = reduce(spoly(G[i], G[j]), G);
        if (h.is_zero()) continue;
        G.push_back(monic(h));
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
    // minimize then interreduce
    std::vector<LaurentPoly> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        auto ei = leading_term(G[i]).first;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            auto ej = leading_term(G[j]).first;
            if (divides_mono(ej, ei) && (ej != ei || j < i)) redundant = true;
        }
        if (!redundant) M.push_back(G[i]);
    }
    std::vector<LaurentPoly> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<LaurentPoly> others;
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        auto lt = leading_term(M[i]);
        LaurentPoly tail = M[i];
        tail.add_term(lt.first, -lt.second);
        LaurentPoly r = LaurentPoly::monomial(M[i].nvars(), lt.first, lt.second) + reduce(tail, others);
        R.push_back(monic(r));
    }
    std::sort(R.begin(), R.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
        return grevlex_less(leading_term(a).first, leading_term(b).first);
    });
    return R;
}

}  // namespace pvkit
