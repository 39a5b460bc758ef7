#include "pca.hpp"

#include "error.hpp"

namespace airrev {

PcaModel fit_pca(const Matrix& d, std::size_t p) {
    if (d.rows() < 2) throw_argument("fit_pca: need at least 2 rows");
    if (p < 1 || p > d.cols()) throw_argument("fit_pca: p out of range 1..n");

    const EigenDecomposition eig = sym_eigen(scatter_matrix(d));

    PcaModel model;
    model.mean = mean_vector(d);
    model.eigenvalues = eig.eigenvalues;
    model.components = Matrix(p, d.cols());
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < d.cols(); ++j)
            model.components(k, j) = eig.eigenvectors(j, k);
    return model;
}

Matrix pca_transform(const PcaModel& model, const Matrix& d) {
    const std::size_t n = model.dimension();
    if (d.cols() != n) throw_argument("pca_transform: column count does not match model");

    const std::size_t p = model.retained();
    Matrix out(d.rows(), p);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t k = 0; k < p; ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                acc += model.components(k, j) * (d(i, j) - model.mean[j]);
            out(i, k) = acc;
        }
    }
    return out;
}

}  // namespace airrev
