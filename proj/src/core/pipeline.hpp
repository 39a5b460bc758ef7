#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kmeans.hpp"
#include "pca.hpp"
#include "regression.hpp"
#include "review.hpp"

namespace airrev {

struct GroupModel {
    std::size_t size = 0;
    RegressionModel model;
    bool underdetermined = false;  // fewer records than the 6 model parameters + 1
};

struct FeatureModelReport {
    Feature feature = Feature::cabin;
    std::map<std::string, GroupModel> groups;  // category -> fitted model
};

// Branch one: partition by a categorical feature, fit one regression per group.
FeatureModelReport feature_based_modeling(const Corpus& corpus, Feature feature);

struct SweepReport {
    std::size_t k_min = 1;
    std::size_t k_max = 10;
    std::size_t repeats = 100;
    std::uint64_t master_seed = 0;
    std::vector<double> avg_mae;  // entry i is the mean over repeats for k = k_min + i
};

// Branch-two model selection: PCA to 2-D once, then for each k and repeat run
// a seeded k-means, fit per-cluster regressions in the original sub-rating
// space, and pool every record's absolute error into one corpus-wide MAE.
SweepReport sweep_k(const Corpus& corpus, std::size_t k_min, std::size_t k_max,
                    std::size_t repeats, std::uint64_t master_seed);

struct ClusterStats {
    std::size_t total = 0;
    std::size_t business = 0;
    std::size_t economy = 0;
    std::size_t premium_economy = 0;
    double avg_overall_rating = 0.0;
    double satisfied_pct = 0.0;  // 100 * recommended / total
};

std::vector<ClusterStats> cluster_statistics(const Corpus& corpus,
                                             std::span<const std::size_t> labels,
                                             std::size_t k);

struct ClusterModel {
    ClusterStats stats;
    bool has_model = false;  // empty clusters carry no regression
    RegressionModel model;
    bool underdetermined = false;
};

struct ClusterModelReport {
    PcaModel pca;
    KMeansModel kmeans;
    std::vector<ClusterModel> clusters;
    Matrix projected;  // m x 2 coordinates for plotting
};

// Branch two at a chosen k: PCA -> k-means -> per-cluster regression + stats.
ClusterModelReport cluster_based_modeling(const Corpus& corpus, const InitSpec& init,
                                          std::size_t k);

}  // namespace airrev
