#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace airrev {

// Dense row-major matrix of doubles. Small: review corpora are a few
// thousand rows by at most six columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }

    std::span<const double> data() const { return data_; }

    bool all_finite() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Symmetric matrix stored once per unordered index pair (packed lower triangle).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order)
        : order_(order), data_(order * (order + 1) / 2, 0.0) {}

    std::size_t order() const { return order_; }

    double& at(std::size_t i, std::size_t j) { return data_[pack(i, j)]; }
    double at(std::size_t i, std::size_t j) const { return data_[pack(i, j)]; }

    Matrix to_dense() const;
    bool all_finite() const;

private:
    static std::size_t pack(std::size_t i, std::size_t j) {
        if (i < j) std::swap(i, j);
        return i * (i + 1) / 2 + j;  // j <= i
    }

    std::size_t order_ = 0;
    std::vector<double> data_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    Matrix eigenvectors;              // column j pairs with eigenvalues[j]
};

struct LeastSquaresSolution {
    std::vector<double> coefficients;
    std::size_t rank = 0;
};

// Column means of D.
std::vector<double> mean_vector(const Matrix& d);

// S = sum_i (x_i - mean)(x_i - mean)^T. Unnormalized; requires m >= 2.
SymmetricMatrix scatter_matrix(const Matrix& d);

// Full symmetric eigendecomposition by cyclic Jacobi rotations.
// Eigenvalues descending; each eigenvector sign-normalized so its
// largest-magnitude component (earliest index on ties) is positive.
EigenDecomposition sym_eigen(const SymmetricMatrix& s);

// Minimizes ||X b - y||_2 via Householder QR with column pivoting.
// Rank-deficient systems get the minimal-norm solution through a
// complete orthogonal decomposition.
LeastSquaresSolution solve_least_squares(const Matrix& x, std::span<const double> y);

}  // namespace airrev
