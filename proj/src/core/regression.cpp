#include "regression.hpp"

#include <cmath>

#include "error.hpp"

namespace airrev {

RegressionModel fit_ols(const Matrix& x, std::span<const double> y) {
    if (x.rows() < 1) throw_argument("fit_ols: no observations");
    if (x.cols() != kSubratingCount) throw_argument("fit_ols: expected 5 predictor columns");
    if (y.size() != x.rows()) throw_argument("fit_ols: target length mismatch");

    Matrix design(x.rows(), kSubratingCount + 1);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        design(i, 0) = 1.0;
        for (std::size_t j = 0; j < kSubratingCount; ++j) design(i, j + 1) = x(i, j);
    }

    const LeastSquaresSolution sol = solve_least_squares(design, y);

    RegressionModel model;
    model.beta0 = sol.coefficients[0];
    for (std::size_t j = 0; j < kSubratingCount; ++j) model.betas[j] = sol.coefficients[j + 1];
    model.n_obs = x.rows();
    model.rank_deficient = sol.rank < kSubratingCount + 1;
    model.mae = mean_absolute_error(model, x, y);
    return model;
}

double predict(const RegressionModel& model, std::span<const double> x) {
    double acc = model.beta0;
    for (std::size_t j = 0; j < kSubratingCount; ++j) acc += model.betas[j] * x[j];
    return acc;
}

double mean_absolute_error(const RegressionModel& model, const Matrix& x,
                           std::span<const double> y) {
    if (x.rows() != y.size()) throw_argument("mean_absolute_error: length mismatch");
    if (x.rows() == 0) throw_argument("mean_absolute_error: no observations");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        sum += std::abs(y[i] - predict(model, x.row(i)));
    return sum / static_cast<double>(x.rows());
}

}  // namespace airrev
