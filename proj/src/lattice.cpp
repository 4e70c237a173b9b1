#include "pvkit/lattice.hpp"

#include <cstdlib>

namespace pvkit {

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

long ext_gcd(long a, long b, long& s, long& t) {
    long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b != 0) {
        long q = a / b;
        long r = a - q * b;
        a = b;
        b = r;
        long ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1;
        t0 = t1;
        s1 = ns;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

bool is_zero_vec(const IVec& v) {
    for (long x : v)
        if (x != 0) return false;
    return true;
}

SmithForm smith_form(const std::vector<IVec>& rows, std::size_t n) {
    std::size_t m = rows.size();
    std::vector<IVec> M = rows;
    std::vector<IVec> W(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) W[i][i] = 1;

    // column operations on M are mirrored as inverse row operations on W
    auto col_add = [&](std::size_t dst, std::size_t src, long c) {  // col_dst += c col_src
        for (std::size_t i = 0; i < m; ++i) M[i][dst] += c * M[i][src];
        for (std::size_t k = 0; k < n; ++k) W[src][k] -= c * W[dst][k];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < m; ++i) std::swap(M[i][a], M[i][b]);
        std::swap(W[a], W[b]);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, long c) {
        for (std::size_t k = 0; k < n; ++k) M[dst][k] += c * M[src][k];
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        auto find_min = [&](std::size_t& pi, std::size_t& pj) {
            long best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (M[i][j] != 0 && (best == 0 || std::labs(M[i][j]) < best)) {
                        best = std::labs(M[i][j]);
                        pi = i;
                        pj = j;
                    }
            return best != 0;
        };
        std::size_t pi = 0, pj = 0;
        if (!find_min(pi, pj)) break;
        while (true) {
            std::swap(M[t], M[pi]);
            if (pj != t) col_swap(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                long q = M[i][t] / M[t][t];
                if (q) row_add(i, t, -q);
                if (M[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                long q = M[t][j] / M[t][t];
                if (q) col_add(j, t, -q);
                if (M[t][j] != 0) clean = false;
            }
            if (!clean) {
                // smallest remainder in row t or column t becomes the new pivot
                long best = 0;
                for (std::size_t i = t; i < m; ++i)
                    if (M[i][t] != 0 && (best == 0 || std::labs(M[i][t]) < best)) {
                        best = std::labs(M[i][t]);
                        pi = i;
                        pj = t;
                    }
                for (std::size_t j = t; j < n; ++j)
                    if (M[t][j] != 0 && (best == 0 || std::labs(M[t][j]) < best)) {
                        best = std::labs(M[t][j]);
                        pi = t;
                        pj = j;
                    }
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (M[i][j] % M[t][t] != 0) {
                        row_add(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (!divisible) {
                pi = t;
                pj = t;
                continue;
            }
            break;
        }
        if (M[t][t] < 0)
            for (auto& x : M[t]) x = -x;
        ++t;
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.diag.push_back(M[i][i]);
    out.basis = W;
    return out;
}

std::vector<long> invariant_factors(const std::vector<IVec>& rows, std::size_t n) {
    return smith_form(rows, n).diag;
}

}  // namespace pvkit
