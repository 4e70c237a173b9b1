#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace pvkit {

using IVec = std::vector<long>;

long floor_div(long a, long b);
// g = s a + t b with g >= 0
long ext_gcd(long a, long b, long& s, long& t);
bool is_zero_vec(const IVec& v);

struct SmithForm {
    std::vector<long> diag;      // nonzero invariant factors d_1 | d_2 | ...
    std::vector<IVec> basis;     // rows w_i of a unimodular matrix; the lattice is spanned by d_i w_i
};

SmithForm smith_form(const std::vector<IVec>& rows, std::size_t n);
std::vector<long> invariant_factors(const std::vector<IVec>& rows, std::size_t n);

// Lattice of relations Y^e = v kept in Hermite normal form. V is a multiplicative
// group element offering operator*, pow(long), is_one() and operator==.
template <class V>
class ValuedLattice {
public:
    struct Row {
        IVec e;
        V v;
        std::size_t pivot;
    };

    ValuedLattice() = default;
    explicit ValuedLattice(std::size_t n) : n_(n) {}

    std::size_t dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

    // false when the relation contradicts the existing ones (forces 1 = c with c != 1)
    bool insert(IVec e, V v) {
        while (true) {
            std::size_t p = first_nonzero(e);
            if (p == n_) return v.is_one();
            auto it = std::find_if(rows_.begin(), rows_.end(), [&](const Row& r) { return r.pivot == p; });
            if (it == rows_.end()) {
                if (e[p] < 0) {
                    for (auto& x : e) x = -x;
                    v = v.pow(-1);
                }
                rows_.push_back(Row{std::move(e), std::move(v), p});
                std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
                reduce_above();
                return true;
            }
            Row& r = *it;
            long a = r.e[p], b = e[p], s, t;
            long g = ext_gcd(a, b, s, t);
            IVec ne(n_), nr(n_);
            for (std::size_t k = 0; k < n_; ++k) {
                nr[k] = s * r.e[k] + t * e[k];
                ne[k] = (a / g) * e[k] - (b / g) * r.e[k];
            }
            V nrv = r.v.pow(s) * v.pow(t);
            V nev = v.pow(a / g) * r.v.pow(-(b / g));
            r.e = std::move(nr);
            r.v = std::move(nrv);
            e = std::move(ne);
            v = std::move(nev);
        }
    }

    // Y^e = f * Y^res with res reduced modulo the lattice
    std::pair<IVec, V> reduce(IVec e, V f) const {
        for (const Row& r : rows_) {
            long k = floor_div(e[r.pivot], r.e[r.pivot]);
            if (k == 0) continue;
            for (std::size_t i = 0; i < n_; ++i) e[i] -= k * r.e[i];
            f = f * r.v.pow(k);
        }
        return {std::move(e), std::move(f)};
    }

    bool contains(const IVec& e, const V& one) const { return is_zero_vec(reduce(e, one).first); }

    // rows with the pivot in the last nonzero column, symmetric residues, first entry positive
    std::vector<std::pair<IVec, V>> display_rows() const {
        ValuedLattice rev(n_);
        for (const Row& r : rows_) {
            IVec e(r.e.rbegin(), r.e.rend());
            rev.insert(std::move(e), r.v);
        }
        auto& rr = rev.rows_;
        for (std::size_t j = 0; j < rr.size(); ++j) {
            long p = rr[j].e[rr[j].pivot];
            for (std::size_t i = 0; i < rr.size(); ++i) {
                if (i == j) continue;
                long k = floor_div(rr[i].e[rr[j].pivot] + p / 2, p);
                if (k == 0) continue;
                for (std::size_t c = 0; c < n_; ++c) rr[i].e[c] -= k * rr[j].e[c];
                rr[i].v = rr[i].v * rr[j].v.pow(-k);
            }
        }
        std::vector<std::pair<IVec, V>> out;
        for (const Row& r : rr) {
            IVec e(r.e.rbegin(), r.e.rend());
            V v = r.v;
            std::size_t f = first_nonzero(e);
            if (f < n_ && e[f] < 0) {
                for (auto& x : e) x = -x;
                v = v.pow(-1);
            }
            out.emplace_back(std::move(e), std::move(v));
        }
        return out;
    }

private:
    std::size_t first_nonzero(const IVec& e) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e[i] != 0) return i;
        return n_;
    }

    void reduce_above() {
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            long p = rows_[j].e[rows_[j].pivot];
            for (std::size_t i = 0; i < j; ++i) {
                long k = floor_div(rows_[i].e[rows_[j].pivot], p);
                if (k == 0) continue;
                for (std::size_t c = 0; c < n_; ++c) rows_[i].e[c] -= k * rows_[j].e[c];
                rows_[i].v = rows_[i].v * rows_[j].v.pow(-k);
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<Row> rows_;
};

}  // namespace pvkit
