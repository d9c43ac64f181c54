#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "eislat/eisenstein.hpp"

namespace eislat {

// Dense row-major matrix over an exact scalar. Small sizes only (rank <= 72
// in this project), no cleverness needed.
template <class T>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<T> d;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), d(r * c, T{}) {}

    T& operator()(size_t i, size_t j) { return d[i * cols + j]; }
    const T& operator()(size_t i, size_t j) const { return d[i * cols + j]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.d == y.d;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(x.rows, y.cols);
        for (size_t i = 0; i < x.rows; ++i)
            for (size_t k = 0; k < x.cols; ++k) {
                const T& xik = x(i, k);
                if (xik == T{}) continue;
                for (size_t j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum shape mismatch");
        Mat r(x.rows, x.cols);
        for (size_t i = 0; i < x.d.size(); ++i) r.d[i] = x.d[i] + y.d[i];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix diff shape mismatch");
        Mat r(x.rows, x.cols);
        for (size_t i = 0; i < x.d.size(); ++i) r.d[i] = x.d[i] - y.d[i];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<T> r(rows, T{});
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transposed() const {
        Mat r(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
};

using IMat = Mat<int64_t>;
using EMat = Mat<Eis>;
using QMat = Mat<Rat>;
using EQMat = Mat<EisQ>;

inline EMat conj_transpose(const EMat& m) {
    EMat r(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) r(j, i) = conj(m(i, j));
    return r;
}

inline EMat conj_entries(const EMat& m) {
    EMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.d.size(); ++i) r.d[i] = conj(m.d[i]);
    return r;
}

template <class T>
Mat<T> mat_pow(Mat<T> m, uint64_t e) {
    Mat<T> r = Mat<T>::identity(m.rows);
    while (e) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Integer row echelon machinery (exact, row operations unimodular over Z).

// In-place Hermite-style row reduction of M; returns the pivot columns.
// Rows of the result span the same Z-module as the input rows.
inline std::vector<size_t> hnf_rows(IMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        // gcd out the column below `row`
        for (size_t i = row + 1; i < m.rows; ++i) {
            while (m(i, col) != 0) {
                if (m(row, col) == 0) {
                    for (size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(i, j));
                    continue;
                }
                int64_t q = m(i, col) / m(row, col);
                for (size_t j = 0; j < m.cols; ++j) m(i, j) = chk_sub(m(i, j), chk_mul(q, m(row, j)));
                if (m(i, col) != 0)
                    for (size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(i, j));
            }
        }
        if (m(row, col) == 0) continue;
        if (m(row, col) < 0)
            for (size_t j = 0; j < m.cols; ++j) m(row, j) = chk_neg(m(row, j));
        // reduce entries above the pivot
        for (size_t i = 0; i < row; ++i) {
            int64_t q = m(i, col) / m(row, col);
            if (m(i, col) % m(row, col) < 0) --q;
            if (q != 0)
                for (size_t j = 0; j < m.cols; ++j) m(i, j) = chk_sub(m(i, j), chk_mul(q, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    m.rows = row;
    m.d.resize(row * m.cols);
    return pivots;
}

inline size_t rank_z(IMat m) { return hnf_rows(m).size(); }

// Basis rows of {x in Z^n : M x^T = 0}. The result is saturated.
inline IMat kernel_rows(const IMat& m) {
    size_t n = m.cols;
    // Column-reduce [M; I] jointly: work on the transpose with row ops.
    IMat t(n, m.rows + n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m.rows; ++j) t(i, j) = m(j, i);
        t(i, m.rows + i) = 1;
    }
    // Row-reduce the left block; rows whose left block vanished carry kernel vectors.
    size_t row = 0;
    for (size_t col = 0; col < m.rows && row < n; ++col) {
        for (size_t i = row + 1; i < n; ++i) {
            while (t(i, col) != 0) {
                if (t(row, col) == 0) {
                    for (size_t j = 0; j < t.cols; ++j) std::swap(t(row, j), t(i, j));
                    continue;
                }
                int64_t q = t(i, col) / t(row, col);
                for (size_t j = 0; j < t.cols; ++j) t(i, j) = chk_sub(t(i, j), chk_mul(q, t(row, j)));
                if (t(i, col) != 0)
                    for (size_t j = 0; j < t.cols; ++j) std::swap(t(row, j), t(i, j));
            }
        }
        if (t(row, col) != 0) ++row;
    }
    IMat ker(n - row, n);
    for (size_t i = row; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ker(i - row, j) = t(i, m.rows + j);
    return ker;
}

// Saturation of the row span: (Q-span of rows) intersected with Z^n.
inline IMat saturate_rows(const IMat& m) { return kernel_rows(kernel_rows(m)); }

// True iff x lies in the Z-span of the rows of m.
inline bool in_row_span_z(const IMat& m, const std::vector<int64_t>& x) {
    IMat h = m;
    std::vector<size_t> piv = hnf_rows(h);
    std::vector<int64_t> v = x;
    for (size_t r = 0; r < piv.size(); ++r) {
        size_t c = piv[r];
        if (v[c] % h(r, c) != 0) {
            // pivot does not divide: maybe still reducible after later rows? no:
            // echelon structure makes this final.
            return false;
        }
        int64_t q = v[c] / h(r, c);
        if (q != 0)
            for (size_t j = 0; j < m.cols; ++j) v[j] = chk_sub(v[j], chk_mul(q, h(r, j)));
    }
    for (int64_t t : v)
        if (t != 0) return false;
    return true;
}

// Smith invariant factors (nonzero ones, in divisibility order).
inline std::vector<int64_t> smith_invariants(IMat m) {
    std::vector<int64_t> inv;
    size_t top = 0;
    while (top < m.rows && top < m.cols) {
        // find a nonzero entry
        size_t pi = top, pj = top;
        bool found = false;
        int64_t best = 0;
        for (size_t i = top; i < m.rows; ++i)
            for (size_t j = top; j < m.cols; ++j)
                if (m(i, j) != 0) {
                    int64_t a = m(i, j) < 0 ? -m(i, j) : m(i, j);
                    if (!found || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
        if (!found) break;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m(top, j), m(pi, j));
        for (size_t i = 0; i < m.rows; ++i) std::swap(m(i, top), m(i, pj));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = top + 1; i < m.rows; ++i)
                while (m(i, top) != 0) {
                    int64_t q = m(i, top) / m(top, top);
                    for (size_t j = 0; j < m.cols; ++j) m(i, j) = chk_sub(m(i, j), chk_mul(q, m(top, j)));
                    if (m(i, top) != 0)
                        for (size_t j = 0; j < m.cols; ++j) std::swap(m(top, j), m(i, j));
                }
            for (size_t j = top + 1; j < m.cols; ++j)
                while (m(top, j) != 0) {
                    int64_t q = m(top, j) / m(top, top);
                    for (size_t i = 0; i < m.rows; ++i) m(i, j) = chk_sub(m(i, j), chk_mul(q, m(i, top)));
                    if (m(top, j) != 0) {
                        for (size_t i = 0; i < m.rows; ++i) std::swap(m(i, top), m(i, j));
                        clean = false;
                    }
                }
            if (!clean) continue;
            // ensure divisibility of the remaining block
            for (size_t i = top + 1; i < m.rows && clean; ++i)
                for (size_t j = top + 1; j < m.cols && clean; ++j)
                    if (m(i, j) % m(top, top) != 0) {
                        for (size_t jj = 0; jj < m.cols; ++jj)
                            m(top, jj) = chk_add(m(top, jj), m(i, jj));
                        clean = false;
                    }
        }
        inv.push_back(m(top, top) < 0 ? -m(top, top) : m(top, top));
        ++top;
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Hermite reduction over the Eisenstein ring (Euclidean, so plain gcd steps).
// Rows span the same O-module afterwards; zero rows dropped.
inline void hnf_rows_eis(EMat& m) {
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        for (size_t i = row + 1; i < m.rows; ++i) {
            while (!m(i, col).is_zero()) {
                if (m(row, col).is_zero()) {
                    for (size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(i, j));
                    continue;
                }
                Eis q = euclidean_divmod(m(i, col), m(row, col)).first;
                for (size_t j = 0; j < m.cols; ++j) m(i, j) = m(i, j) - q * m(row, j);
                if (!m(i, col).is_zero())
                    for (size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(i, j));
            }
        }
        if (m(row, col).is_zero()) continue;
        ++row;
    }
    m.rows = row;
    m.d.resize(row * m.cols);
}

inline size_t rank_eis(EMat m) {
    hnf_rows_eis(m);
    return m.rows;
}

// Fraction-free (Bareiss) determinant over O.
inline Eis det_eis(EMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return Eis{1};
    Eis prev{1};
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Eis{0};
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    Eis det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Gaussian solve A x = b over the field Q(omega). Throws if singular.
inline std::vector<EisQ> solve_eisq(EQMat a, std::vector<EisQ> b) {
    size_t n = a.rows;
    if (a.cols != n || b.size() != n) throw std::invalid_argument("solve shape mismatch");
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw std::domain_error("singular system");
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(b[k], b[p]);
        }
        EisQ ip = inv(a(k, k));
        for (size_t j = k; j < n; ++j) a(k, j) = ip * a(k, j);
        b[k] = ip * b[k];
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            EisQ f = a(i, k);
            for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    return b;
}

// Inertia (p, n, z) of a rational symmetric matrix, by congruence
// diagonalization with symmetric pivoting. Exact; no square roots needed.
inline std::tuple<size_t, size_t, size_t> symmetric_inertia(QMat a) {
    size_t n = a.rows;
    if (a.cols != n) throw std::invalid_argument("inertia of non-square matrix");
    size_t pos = 0, neg = 0, zero = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t p = n;
        for (size_t i = k; i < n; ++i)
            if (!a(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            // diagonal block is zero; look for an off-diagonal entry
            size_t oi = n, oj = n;
            for (size_t i = k; i < n && oi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (!a(i, j).is_zero()) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                zero += n - k;
                break;
            }
            // congruence: add row/col oj into oi to expose a nonzero diagonal
            for (size_t j = 0; j < n; ++j) a(oi, j) += a(oj, j);
            for (size_t i = 0; i < n; ++i) a(i, oi) += a(i, oj);
            p = oi;
        }
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            for (size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k));
        }
        Rat piv = a(k, k);
        if (piv.sign() > 0)
            ++pos;
        else
            ++neg;
        // Schur complement against the untouched pivot row; stays symmetric.
        for (size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rat f = a(i, k) / piv;
            for (size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (size_t j = k + 1; j < n; ++j) {
            a(k, j) = Rat(0);
            a(j, k) = Rat(0);
        }
    }
    return {pos, neg, zero};
}

}  // namespace eislat
