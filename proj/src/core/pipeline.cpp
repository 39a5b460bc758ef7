#include "pipeline.hpp"

#include <cmath>
#include <optional>

#include "error.hpp"
#include "rng.hpp"

namespace airrev {

namespace {

std::vector<double> overall_vector(const Corpus& corpus) {
    std::vector<double> y(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) y[i] = corpus.records[i].overall_rating;
    return y;
}

RegressionModel fit_group(const Matrix& x, const std::vector<double>& y,
                          const std::vector<std::size_t>& members) {
    Matrix xg(members.size(), kSubratingCount);
    std::vector<double> yg(members.size());
    for (std::size_t r = 0; r < members.size(); ++r) {
        for (std::size_t j = 0; j < kSubratingCount; ++j) xg(r, j) = x(members[r], j);
        yg[r] = y[members[r]];
    }
    return fit_ols(xg, yg);
}

// One scored repeat: cluster the projected points, fit each cluster in the
// original sub-rating space, pool absolute errors over all records.
double clustered_mae(const Matrix& proj, const Matrix& x, const std::vector<double>& y,
                     std::size_t k, std::uint64_t seed) {
    const KMeansModel km = run_kmeans(proj, InitSpec::random(seed), k);

    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < km.labels.size(); ++i) members[km.labels[i]].push_back(i);

    std::vector<std::optional<RegressionModel>> models(k);
    for (std::size_t c = 0; c < k; ++c)
        if (!members[c].empty()) models[c] = fit_group(x, y, members[c]);

    double sum = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        sum += std::abs(y[i] - predict(*models[km.labels[i]], x.row(i)));
    return sum / static_cast<double>(x.rows());
}

}  // namespace

FeatureModelReport feature_based_modeling(const Corpus& corpus, Feature feature) {
    const auto partition = group_by_feature(corpus, feature);
    const Matrix x = to_matrix(corpus, false);
    const std::vector<double> y = overall_vector(corpus);

    FeatureModelReport report;
    report.feature = feature;
    for (const auto& [category, members] : partition) {
        GroupModel gm;
        gm.size = members.size();
        gm.model = fit_group(x, y, members);
        gm.underdetermined = members.size() < kSubratingCount + 2;
        report.groups.emplace(category, std::move(gm));
    }
    return report;
}

SweepReport sweep_k(const Corpus& corpus, std::size_t k_min, std::size_t k_max,
                    std::size_t repeats, std::uint64_t master_seed) {
    if (k_min < 1 || k_min > k_max) throw_argument("sweep_k: need 1 <= k_min <= k_max");
    if (repeats < 1) throw_argument("sweep_k: repeats must be positive");
    if (corpus.size() < k_max) throw_argument("sweep_k: corpus smaller than k_max");

    const Matrix x6 = to_matrix(corpus, true);
    const PcaModel pca = fit_pca(x6, 2);
    const Matrix proj = pca_transform(pca, x6);
    const Matrix x = to_matrix(corpus, false);
    const std::vector<double> y = overall_vector(corpus);

    SweepReport report;
    report.k_min = k_min;
    report.k_max = k_max;
    report.repeats = repeats;
    report.master_seed = master_seed;

    // Repeats are independent given their derived seeds; results reduce in
    // (k, repeat) order. Extended precision keeps the repeat mean exact when
    // every repeat scores identically (the k = 1 case).
    for (std::size_t k = k_min; k <= k_max; ++k) {
        long double acc = 0.0L;
        for (std::size_t r = 0; r < repeats; ++r)
            acc += clustered_mae(proj, x, y, k, derive_seed(master_seed, k, r));
        report.avg_mae.push_back(static_cast<double>(acc / static_cast<long double>(repeats)));
    }
    return report;
}

std::vector<ClusterStats> cluster_statistics(const Corpus& corpus,
                                             std::span<const std::size_t> labels,
                                             std::size_t k) {
    if (labels.size() != corpus.size())
        throw_argument("cluster_statistics: one label per record required");

    std::vector<ClusterStats> stats(k);
    std::vector<double> rating_sum(k, 0.0);
    std::vector<std::size_t> recommended(k, 0);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::size_t c = labels[i];
        if (c >= k) throw_argument("cluster_statistics: label out of range");
        const ReviewRecord& rec = corpus.records[i];
        ++stats[c].total;
        if (rec.cabin == kCabinNames[0])
            ++stats[c].business;
        else if (rec.cabin == kCabinNames[1])
            ++stats[c].economy;
        else
            ++stats[c].premium_economy;
        rating_sum[c] += rec.overall_rating;
        if (rec.recommended) ++recommended[c];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (stats[c].total == 0) continue;
        stats[c].avg_overall_rating = rating_sum[c] / static_cast<double>(stats[c].total);
        stats[c].satisfied_pct =
            100.0 * static_cast<double>(recommended[c]) / static_cast<double>(stats[c].total);
    }
    return stats;
}

ClusterModelReport cluster_based_modeling(const Corpus& corpus, const InitSpec& init,
                                          std::size_t k) {
    if (corpus.size() < k) throw_argument("cluster_based_modeling: corpus smaller than k");

    const Matrix x6 = to_matrix(corpus, true);

    ClusterModelReport report;
    report.pca = fit_pca(x6, 2);
    report.projected = pca_transform(report.pca, x6);
    report.kmeans = run_kmeans(report.projected, init, k);

    const Matrix x = to_matrix(corpus, false);
    const std::vector<double> y = overall_vector(corpus);
    const auto stats = cluster_statistics(corpus, report.kmeans.labels, k);

    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < corpus.size(); ++i) members[report.kmeans.labels[i]].push_back(i);

    for (std::size_t c = 0; c < k; ++c) {
        ClusterModel cm;
        cm.stats = stats[c];
        if (!members[c].empty()) {
            cm.has_model = true;
            cm.model = fit_group(x, y, members[c]);
            cm.underdetermined = members[c].size() < kSubratingCount + 2;
        }
        report.clusters.push_back(std::move(cm));
    }
    return report;
}

}  // namespace airrev
