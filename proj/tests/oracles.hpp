// Independent reference computations for the test suite. Deliberately use
// different algorithms from the library paths they check: normal equations
// with Gaussian elimination instead of QR, characteristic-polynomial roots
// instead of Jacobi iteration.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "core/matrix.hpp"

namespace oracles {

// Solves (X^T X) b = X^T y by Gaussian elimination with partial pivoting.
// Valid for the full-rank instances the tests feed it.
inline std::vector<double> normal_equations_fit(const airrev::Matrix& x,
                                                std::span<const double> y) {
    const std::size_t m = x.rows();
    const std::size_t q = x.cols();
    std::vector<std::vector<double>> a(q, std::vector<double>(q + 1, 0.0));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < m; ++r) s += x(r, i) * x(r, j);
            a[i][j] = s;
        }
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += x(r, i) * y[r];
        a[i][q] = s;
    }

    for (std::size_t col = 0; col < q; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < q; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        if (a[col][col] == 0.0) throw std::runtime_error("normal_equations_fit: singular system");
        for (std::size_t r = col + 1; r < q; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= q; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<double> beta(q, 0.0);
    for (std::size_t i = q; i-- > 0;) {
        double acc = a[i][q];
        for (std::size_t j = i + 1; j < q; ++j) acc -= a[i][j] * beta[j];
        beta[i] = acc / a[i][i];
    }
    return beta;
}

// Roots of det(A - t I) for a symmetric 2x2 [[a, b], [b, c]], descending.
inline std::array<double, 2> eigenvalues_2x2(double a, double b, double c) {
    const double mean = 0.5 * (a + c);
    const double radius = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return {mean + radius, mean - radius};
}

inline double det3(const airrev::Matrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Trigonometric solution of the characteristic cubic of a symmetric 3x3;
// all roots are real. Descending order.
inline std::array<double, 3> eigenvalues_3x3(const airrev::SymmetricMatrix& s) {
    const airrev::Matrix a = s.to_dense();
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    if (p2 == 0.0) return {q, q, q};
    const double p = std::sqrt(p2 / 6.0);

    airrev::Matrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
    const double r = std::clamp(det3(b) / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;

    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {hi, 3.0 * q - hi - lo, lo};
}

inline double mae_by_summation(std::span<const double> truth, std::span<const double> predicted) {
    double s = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) s += std::abs(truth[i] - predicted[i]);
    return s / static_cast<double>(truth.size());
}

inline double max_abs_entry(const airrev::Matrix& m) {
    double v = 0.0;
    for (double x : m.data()) v = std::max(v, std::abs(x));
    return v;
}

// Induced infinity norm (max absolute row sum).
inline double inf_norm(const airrev::Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

}  // namespace oracles
