#ifndef CVM_DENSE_MATRIX_HPP
#define CVM_DENSE_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cvm/errors.hpp"

namespace cvm {

/// Row-major dense real matrix. Plain value semantics throughout; every
/// operation below returns a fresh matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1)
            throw dimension_error("matrix dimensions must be positive");
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                     0.0);
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(j)];
    }
    double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(j)];
    }

    const std::vector<double>& data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Standard O(n^3) product.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("matmul: inner dimensions differ (" +
                              std::to_string(a.cols()) + " vs " +
                              std::to_string(b.rows()) + ")");
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

/// Matrix-vector product.
inline std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw dimension_error("matvec: vector length " + std::to_string(x.size()) +
                              " does not match " + std::to_string(a.cols()) + " columns");
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < a.cols(); ++j)
            acc += a(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

/// Largest absolute entrywise difference between two equal-shaped matrices.
inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("max_abs_diff: shapes differ");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

namespace detail {

// Shared elimination kernel: reduces `work` in place with partial pivoting
// while mirroring every row operation onto `rhs` (Gauss-Jordan). Returns the
// determinant accumulated from the pivots. A pivot smaller than
// 1e-13 times the largest remaining entry of its row counts as singular.
inline double eliminate(DenseMatrix& work, DenseMatrix* rhs) {
    const int n = work.rows();
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(work(i, col)) > std::abs(work(pivot_row, col)))
                pivot_row = i;

        double row_scale = 0.0;
        for (int j = col; j < n; ++j)
            row_scale = std::max(row_scale, std::abs(work(pivot_row, j)));
        const double pivot = work(pivot_row, col);
        if (row_scale == 0.0 || std::abs(pivot) < 1e-13 * row_scale)
            throw singular_matrix_error(
                "matrix is singular to working precision at column " +
                std::to_string(col));

        if (pivot_row != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work(pivot_row, j), work(col, j));
                if (rhs) std::swap((*rhs)(pivot_row, j), (*rhs)(col, j));
            }
            det = -det;
        }
        det *= pivot;

        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const double factor = work(i, col) / pivot;
            if (factor == 0.0) continue;
            for (int j = col; j < n; ++j)
                work(i, j) -= factor * work(col, j);
            if (rhs)
                for (int j = 0; j < n; ++j)
                    (*rhs)(i, j) -= factor * (*rhs)(col, j);
        }
    }
    if (rhs) {
        for (int i = 0; i < n; ++i) {
            const double inv_pivot = 1.0 / work(i, i);
            for (int j = 0; j < n; ++j)
                (*rhs)(i, j) *= inv_pivot;
        }
    }
    return det;
}

} // namespace detail

/**
 * Inverse by Gauss-Jordan elimination with partial pivoting, O(n^3).
 *
 * This is the library's reference inverse: it knows nothing about matrix
 * structure and serves as the independent check for the structured
 * inversion. Throws singular_matrix_error when a pivot falls below
 * 1e-13 times the scale of its row's remaining block.
 */
inline DenseMatrix gauss_inverse(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw dimension_error("gauss_inverse: matrix must be square");
    DenseMatrix work = a;
    DenseMatrix inv = DenseMatrix::identity(a.rows());
    detail::eliminate(work, &inv);
    return inv;
}

/// Determinant from the elimination pivots, same kernel as gauss_inverse.
inline double gauss_determinant(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw dimension_error("gauss_determinant: matrix must be square");
    DenseMatrix work = a;
    return detail::eliminate(work, nullptr);
}

} // namespace cvm

#endif // CVM_DENSE_MATRIX_HPP
