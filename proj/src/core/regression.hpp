#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "matrix.hpp"
#include "review.hpp"

namespace airrev {

// Linear model: overall rating = beta0 + sum_j beta_j * doubled sub-rating j.
struct RegressionModel {
    double beta0 = 0.0;
    std::array<double, kSubratingCount> betas{};  // value_money .. entertainment
    std::size_t n_obs = 0;
    double mae = 0.0;
    bool rank_deficient = false;
};

// Least-squares fit with an intercept column; x is m x 5 doubled sub-ratings.
// Collinear designs get the minimal-norm fit and a rank_deficient flag.
RegressionModel fit_ols(const Matrix& x, std::span<const double> y);

double predict(const RegressionModel& model, std::span<const double> x);

// (1/m) sum |y_i - predict(x_i)|.
double mean_absolute_error(const RegressionModel& model, const Matrix& x,
                           std::span<const double> y);

}  // namespace airrev
