#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pvkit {

inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }

// dense row-major matrix over an exact field F
template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}
    F& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// reduced row echelon form in place; returns pivot columns
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && is_zero(m(p, c))) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(p, k), m(r, k));
        F inv = F(1) / m(r, c);
        for (std::size_t k = c; k < m.cols; ++k) m(r, k) = m(r, k) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (std::size_t k = c; k < m.cols; ++k) m(i, k) = m(i, k) - f * m(r, k);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<F> v(m.cols, F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F(0) - m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// one particular solution of A v = b, or nullopt when inconsistent
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& A, const std::vector<F>& b) {
    Matrix<F> m(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
        m(i, A.cols) = b[i];
    }
    auto piv = rref(m);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    std::vector<F> v(A.cols, F(0));
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = m(i, A.cols);
    return v;
}

template <class F>
F determinant(Matrix<F> m) {
    F det(1);
    std::size_t n = m.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return F(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = F(0) - det;
        }
        det = det * m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            F f = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(i, k) = m(i, k) - f * m(c, k);
        }
    }
    return det;
}

}  // namespace pvkit
