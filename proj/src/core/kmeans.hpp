#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matrix.hpp"

namespace airrev {

enum class InitMode { random_points, fixed };

struct InitSpec {
    InitMode mode = InitMode::random_points;
    Matrix fixed_centers;    // fixed mode: exactly k rows of dimension p
    std::uint64_t seed = 0;  // random mode

    static InitSpec random(std::uint64_t seed) { return {InitMode::random_points, {}, seed}; }
    static InitSpec fixed(Matrix centers) { return {InitMode::fixed, std::move(centers), 0}; }
};

struct KMeansModel {
    std::size_t k = 0;
    Matrix centers;                   // k x p
    std::vector<std::size_t> labels;  // one per point, in 0..k-1
    double sse = 0.0;                 // within-cluster sum of squared distances
    std::size_t iterations = 0;       // center-update rounds performed
    bool converged = false;           // label-stable before the iteration cap
    std::vector<double> sse_history;  // SSE after every assignment step
};

// The six 2-D initial centers used by the final clustering run: four corner
// points of the projected data's bounding rectangle plus two quarter-distance
// points, as fixed constants.
Matrix fixed_paper_centers();

// Nearest-center labels; exact ties go to the lowest center index.
std::vector<std::size_t> assign(const Matrix& points, const Matrix& centers);

// Lloyd iteration until no label changes or max_iter center updates.
// Random init draws k distinct point indices; a cluster that loses all
// members keeps its previous center.
KMeansModel run_kmeans(const Matrix& points, const InitSpec& init, std::size_t k,
                       std::size_t max_iter = 500);

}  // namespace airrev
