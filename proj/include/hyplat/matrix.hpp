#pragma once

#include <hyplat/errors.hpp>
#include <hyplat/numeric.hpp>

#include <optional>
#include <tuple>
#include <vector>

namespace hyplat {

/// Dense row-major matrix over an exact scalar (Int or Rat).
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw ContractViolation("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw ContractViolation("matrix-vector shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

/// Bareiss fraction-free elimination; exact determinant of an integer matrix.
inline Int det_bareiss(IntMat m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw ContractViolation("determinant of non-square matrix");
    if (n == 0) return 1;
    Int prev = 1;
    int sg = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            sg = -sg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact by Bareiss identity
            }
        prev = m(k, k);
    }
    return sg > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

/// Row-reduces in place; returns pivot column indices.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        Rat inv = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatMat m) { return rref(m).size(); }

/// Basis of the right kernel {x : Mx = 0} over Q.
inline std::vector<std::vector<Rat>> kernel_basis(RatMat m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves Mx = b over Q; nullopt when inconsistent. Free variables are set to 0.
inline std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b) {
    RatMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rat> x(m.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

inline std::optional<RatMat> inverse(const RatMat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Exact inverse of a unimodular integer matrix.
inline IntMat unimodular_inverse(const IntMat& m) {
    auto inv = inverse(to_rational(m));
    if (!inv) throw NotUnimodular("matrix is singular");
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer((*inv)(i, j)))
                throw NotUnimodular("inverse is not integral");
            r(i, j) = numerator((*inv)(i, j));
        }
    return r;
}

struct Inertia {
    std::size_t n_plus = 0, n_zero = 0, n_minus = 0;
};

/// Signature of a symmetric rational matrix by exact congruence diagonalization
/// (Lagrange reduction with a rank-2 fallback when all diagonal entries vanish).
inline Inertia inertia(RatMat a) {
    if (!a.is_symmetric()) throw ContractViolation("inertia of non-symmetric matrix");
    Inertia out;
    std::size_t n = a.rows();
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;

    // operates on the submatrix indexed by live[k..]
    std::size_t k = 0;
    while (k < live.size()) {
        // find a nonzero diagonal entry among the remaining rows
        std::size_t pick = live.size();
        for (std::size_t t = k; t < live.size(); ++t)
            if (a(live[t], live[t]) != 0) { pick = t; break; }
        if (pick == live.size()) {
            // all remaining diagonal zero; look for an off-diagonal entry
            std::size_t oi = live.size(), oj = live.size();
            for (std::size_t t = k; t < live.size() && oi == live.size(); ++t)
                for (std::size_t u = t + 1; u < live.size(); ++u)
                    if (a(live[t], live[u]) != 0) { oi = t; oj = u; break; }
            if (oi == live.size()) {
                out.n_zero += live.size() - k;  // zero block
                break;
            }
            // row/col addition makes the diagonal nonzero: a_ii' = 2 a_ij
            std::size_t i = live[oi], j = live[oj];
            for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
            for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
            std::swap(live[k], live[oi]);
            continue;
        }
        std::swap(live[k], live[pick]);
        std::size_t p = live[k];
        const Rat d = a(p, p);
        if (d > 0) ++out.n_plus; else ++out.n_minus;
        for (std::size_t t = k + 1; t < live.size(); ++t) {
            std::size_t r = live[t];
            if (a(r, p) == 0) continue;
            Rat f = a(r, p) / d;
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(p, c);
            for (std::size_t c = 0; c < n; ++c) a(c, r) -= f * a(c, p);
        }
        ++k;
    }
    return out;
}

inline bool is_negative_definite(const RatMat& g) {
    Inertia in = inertia(g);
    return in.n_plus == 0 && in.n_zero == 0;
}

/// Basis over Z of {x : Mx = 0} for an integer matrix, via unimodular column
/// reduction (column-style Hermite form with a transform accumulator).
inline std::vector<std::vector<Int>> integer_kernel(IntMat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat u = IntMat::identity(cols);
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
        // euclidean reduction across columns pivot_col..cols-1 on row r
        while (true) {
            std::size_t nz = 0;
            std::size_t last = cols;
            for (std::size_t c = pivot_col; c < cols; ++c)
                if (m(r, c) != 0) { ++nz; last = c; }
            if (nz == 0) break;
            if (nz == 1) {
                if (last != pivot_col)
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, last), m(i, pivot_col));
                if (last != pivot_col)
                    for (std::size_t i = 0; i < cols; ++i) std::swap(u(i, last), u(i, pivot_col));
                ++pivot_col;
                break;
            }
            // find column with smallest nonzero |entry| in row r
            std::size_t best = cols;
            for (std::size_t c = pivot_col; c < cols; ++c)
                if (m(r, c) != 0 && (best == cols || abs(m(r, c)) < abs(m(r, best)))) best = c;
            for (std::size_t c = pivot_col; c < cols; ++c) {
                if (c == best || m(r, c) == 0) continue;
                Int q = m(r, c) / m(r, best);
                if (q != 0) {
                    for (std::size_t i = 0; i < rows; ++i) m(i, c) -= q * m(i, best);
                    for (std::size_t i = 0; i < cols; ++i) u(i, c) -= q * u(i, best);
                }
            }
        }
    }
    // zero columns of m give the kernel basis (read from u)
    std::vector<std::vector<Int>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < rows && zero; ++r) zero = m(r, c) == 0;
        if (!zero) continue;
        std::vector<Int> v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = u(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hyplat
