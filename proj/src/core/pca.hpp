#pragma once

#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace airrev {

struct PcaModel {
    std::vector<double> mean;         // n
    Matrix components;                // p x n, rows are eigenvectors, top first
    std::vector<double> eigenvalues;  // all n scatter eigenvalues, descending

    std::size_t dimension() const { return mean.size(); }
    std::size_t retained() const { return components.rows(); }
};

// Top-p principal directions of the scatter matrix of d. Requires m >= 2
// and 1 <= p <= n; a zero-scatter input yields a valid all-zero-eigenvalue model.
PcaModel fit_pca(const Matrix& d, std::size_t p);

// Centered projection: row i of the output is components * (row_i - mean).
Matrix pca_transform(const PcaModel& model, const Matrix& d);

}  // namespace airrev
