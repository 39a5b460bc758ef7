#include "kmeans.hpp"

#include <numeric>

#include "error.hpp"
#include "rng.hpp"

namespace airrev {

Matrix fixed_paper_centers() {
    return Matrix::from_rows({
        {7.0, 9.0},
        {-14.0, 9.0},
        {7.0, -7.0},
        {-3.5, -3.0},
        {-3.5, 5.0},
        {-14.0, -7.0},
    });
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

double within_cluster_sse(const Matrix& points, const Matrix& centers,
                          const std::vector<std::size_t>& labels) {
    double sse = 0.0;
    for (std::size_t i = 0; i < points.rows(); ++i)
        sse += squared_distance(points.row(i), centers.row(labels[i]));
    return sse;
}

Matrix initial_centers(const Matrix& points, const InitSpec& init, std::size_t k) {
    if (init.mode == InitMode::fixed) {
        if (init.fixed_centers.rows() != k)
            throw_argument("run_kmeans: fixed init needs exactly k centers");
        if (init.fixed_centers.cols() != points.cols())
            throw_argument("run_kmeans: fixed center dimension mismatch");
        return init.fixed_centers;
    }
    if (points.rows() < k) throw_argument("run_kmeans: fewer points than clusters");

    // k distinct indices by partial Fisher-Yates.
    std::vector<std::size_t> idx(points.rows());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(init.seed);
    Matrix centers(k, points.cols());
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t pick = c + rng.next_index(idx.size() - c);
        std::swap(idx[c], idx[pick]);
        for (std::size_t j = 0; j < points.cols(); ++j) centers(c, j) = points(idx[c], j);
    }
    return centers;
}

}  // namespace

std::vector<std::size_t> assign(const Matrix& points, const Matrix& centers) {
    if (centers.rows() == 0) throw_argument("assign: no centers");
    if (points.cols() != centers.cols()) throw_argument("assign: dimension mismatch");

    std::vector<std::size_t> labels(points.rows(), 0);
    for (std::size_t i = 0; i < points.rows(); ++i) {
        double best = squared_distance(points.row(i), centers.row(0));
        std::size_t best_c = 0;
        for (std::size_t c = 1; c < centers.rows(); ++c) {
            const double d = squared_distance(points.row(i), centers.row(c));
            if (d < best) {  // strict: ties stay with the lower index
                best = d;
                best_c = c;
            }
        }
        labels[i] = best_c;
    }
    return labels;
}

KMeansModel run_kmeans(const Matrix& points, const InitSpec& init, std::size_t k,
                       std::size_t max_iter) {
    if (k < 1) throw_argument("run_kmeans: k must be positive");
    if (max_iter < 1) throw_argument("run_kmeans: max_iter must be positive");
    if (points.rows() == 0) throw_argument("run_kmeans: no points");

    KMeansModel model;
    model.k = k;
    model.centers = initial_centers(points, init, k);
    model.labels = assign(points, model.centers);
    model.sse_history.push_back(within_cluster_sse(points, model.centers, model.labels));

    const std::size_t p = points.cols();
    std::vector<std::size_t> counts(k);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        // Centers become member means; empty clusters keep their old center.
        Matrix sums(k, p);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < points.rows(); ++i) {
            const std::size_t c = model.labels[i];
            ++counts[c];
            for (std::size_t j = 0; j < p; ++j) sums(c, j) += points(i, j);
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;
            for (std::size_t j = 0; j < p; ++j)
                model.centers(c, j) = sums(c, j) / static_cast<double>(counts[c]);
        }
        ++model.iterations;

        std::vector<std::size_t> next = assign(points, model.centers);
        model.sse_history.push_back(within_cluster_sse(points, model.centers, next));
        if (next == model.labels) {
            model.converged = true;
            break;
        }
        model.labels = std::move(next);
    }

    model.sse = model.sse_history.back();
    return model;
}

}  // namespace airrev
