#include "report.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "format.hpp"

namespace airrev {

namespace {

constexpr std::array<std::string_view, 6> kBetaKeys = {
    "beta0",          "beta_value_money", "beta_seat_comfort",
    "beta_staff_service", "beta_catering",    "beta_entertainment"};

void header_lines(std::ostream& os, std::string_view kind, const RunInfo& info,
                  std::string_view prefix) {
    os << prefix << "format: " << kReportFormatTag << "\n";
    os << prefix << "kind: " << kind << "\n";
    os << prefix << "input: " << info.input << "\n";
    os << prefix << "records: " << info.records << "\n";
    os << prefix << "rejected_rows: " << info.rejected << "\n";
}

void regression_values(std::ostream& os, const RegressionModel& m, std::string_view key_prefix) {
    os << key_prefix << kBetaKeys[0] << ": " << format_double(m.beta0) << "\n";
    for (std::size_t j = 0; j < kSubratingCount; ++j)
        os << key_prefix << kBetaKeys[j + 1] << ": " << format_double(m.betas[j]) << "\n";
    os << key_prefix << "mae: " << format_double(m.mae) << "\n";
}

void regression_cells(std::ostream& os, const RegressionModel& m) {
    os << format_double(m.beta0);
    for (double b : m.betas) os << ',' << format_double(b);
    os << ',' << format_double(m.mae);
}

std::string join_doubles(std::span<const double> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += format_double(values[i]);
    }
    return out;
}

std::string join_row(const Matrix& m, std::size_t i) { return join_doubles(m.row(i)); }

}  // namespace

ReportFormat report_format_from_name(std::string_view name) {
    if (name == "text" || name == "structured-text") return ReportFormat::text;
    if (name == "tabular") return ReportFormat::tabular;
    throw_argument("unknown report format: " + std::string(name));
}

std::string render_validate_report(const RunInfo& info, const std::vector<Rejection>& rejections) {
    std::ostringstream os;
    header_lines(os, "validate", info, "");
    os << rejection_report(rejections);
    return os.str();
}

std::string render_feature_report(const RunInfo& info, const FeatureModelReport& report,
                                  ReportFormat format) {
    std::ostringstream os;
    const std::string_view prefix = format == ReportFormat::tabular ? "# " : "";
    header_lines(os, "feature-model", info, prefix);
    os << prefix << "feature: " << feature_name(report.feature) << "\n";
    os << prefix << "group_count: " << report.groups.size() << "\n";

    if (format == ReportFormat::text) {
        for (const auto& [category, gm] : report.groups) {
            const std::string key = "group." + category + ".";
            os << key << "n_obs: " << gm.size << "\n";
            os << key << "underdetermined: " << (gm.underdetermined ? 1 : 0) << "\n";
            os << key << "rank_deficient: " << (gm.model.rank_deficient ? 1 : 0) << "\n";
            regression_values(os, gm.model, key);
        }
    } else {
        os << "group,n_obs,underdetermined,rank_deficient";
        for (auto k : kBetaKeys) os << ',' << k;
        os << ",mae\n";
        for (const auto& [category, gm] : report.groups) {
            os << category << ',' << gm.size << ',' << (gm.underdetermined ? 1 : 0) << ','
               << (gm.model.rank_deficient ? 1 : 0) << ',';
            regression_cells(os, gm.model);
            os << "\n";
        }
    }
    return os.str();
}

std::string render_sweep_report(const RunInfo& info, const SweepReport& report,
                                ReportFormat format) {
    std::ostringstream os;
    const std::string_view prefix = format == ReportFormat::tabular ? "# " : "";
    header_lines(os, "sweep", info, prefix);
    os << prefix << "k_min: " << report.k_min << "\n";
    os << prefix << "k_max: " << report.k_max << "\n";
    os << prefix << "repeats: " << report.repeats << "\n";
    os << prefix << "master_seed: " << report.master_seed << "\n";
    os << prefix << "seed_derivation: splitmix64(master_seed, k, repeat)\n";

    if (format == ReportFormat::text) {
        for (std::size_t i = 0; i < report.avg_mae.size(); ++i)
            os << "avg_mae." << report.k_min + i << ": " << format_double(report.avg_mae[i])
               << "\n";
    } else {
        os << "k,avg_mae\n";
        for (std::size_t i = 0; i < report.avg_mae.size(); ++i)
            os << report.k_min + i << ',' << format_double(report.avg_mae[i]) << "\n";
    }
    return os.str();
}

std::string render_cluster_report(const RunInfo& info, const ClusterModelReport& report,
                                  const std::string& init_name, ReportFormat format) {
    std::ostringstream os;
    const std::string_view prefix = format == ReportFormat::tabular ? "# " : "";
    header_lines(os, "cluster-model", info, prefix);
    os << prefix << "k: " << report.kmeans.k << "\n";
    os << prefix << "init: " << init_name << "\n";
    os << prefix << "master_seed: " << info.master_seed << "\n";
    os << prefix << "pca.p: " << report.pca.retained() << "\n";
    os << prefix << "pca.mean: " << join_doubles(report.pca.mean) << "\n";
    os << prefix << "pca.eigenvalues: " << join_doubles(report.pca.eigenvalues) << "\n";
    for (std::size_t r = 0; r < report.pca.retained(); ++r)
        os << prefix << "pca.component." << r << ": " << join_row(report.pca.components, r)
           << "\n";
    os << prefix << "kmeans.iterations: " << report.kmeans.iterations << "\n";
    os << prefix << "kmeans.converged: " << (report.kmeans.converged ? 1 : 0) << "\n";
    os << prefix << "kmeans.sse: " << format_double(report.kmeans.sse) << "\n";
    for (std::size_t c = 0; c < report.kmeans.k; ++c)
        os << prefix << "kmeans.center." << c << ": " << join_row(report.kmeans.centers, c)
           << "\n";

    if (format == ReportFormat::text) {
        for (std::size_t c = 0; c < report.clusters.size(); ++c) {
            const ClusterModel& cm = report.clusters[c];
            const std::string key = "cluster." + std::to_string(c) + ".";
            os << key << "total: " << cm.stats.total << "\n";
            os << key << "business: " << cm.stats.business << "\n";
            os << key << "economy: " << cm.stats.economy << "\n";
            os << key << "premium_economy: " << cm.stats.premium_economy << "\n";
            os << key << "avg_overall_rating: " << format_double(cm.stats.avg_overall_rating)
               << "\n";
            os << key << "satisfied_pct: " << format_double(cm.stats.satisfied_pct) << "\n";
            os << key << "regression: " << (cm.has_model ? "fitted" : "omitted-empty") << "\n";
            if (cm.has_model) {
                os << key << "underdetermined: " << (cm.underdetermined ? 1 : 0) << "\n";
                os << key << "rank_deficient: " << (cm.model.rank_deficient ? 1 : 0) << "\n";
                regression_values(os, cm.model, key);
            }
        }
    } else {
        os << "cluster,total,business,economy,premium_economy,avg_overall_rating,"
              "satisfied_pct,regression,underdetermined,rank_deficient";
        for (auto k : kBetaKeys) os << ',' << k;
        os << ",mae\n";
        for (std::size_t c = 0; c < report.clusters.size(); ++c) {
            const ClusterModel& cm = report.clusters[c];
            os << c << ',' << cm.stats.total << ',' << cm.stats.business << ','
               << cm.stats.economy << ',' << cm.stats.premium_economy << ','
               << format_double(cm.stats.avg_overall_rating) << ','
               << format_double(cm.stats.satisfied_pct) << ','
               << (cm.has_model ? "fitted" : "omitted-empty") << ',';
            if (cm.has_model) {
                os << (cm.underdetermined ? 1 : 0) << ',' << (cm.model.rank_deficient ? 1 : 0)
                   << ',';
                regression_cells(os, cm.model);
            } else {
                os << ",,,,,,,,";
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string feature_betas_csv(const FeatureModelReport& report) {
    std::ostringstream os;
    os << "group";
    for (std::size_t j = 0; j < kSubratingCount; ++j) os << ",beta_" << kSubratingNames[j];
    os << "\n";
    for (const auto& [category, gm] : report.groups) {
        os << category;
        for (double b : gm.model.betas) os << ',' << format_double(b);
        os << "\n";
    }
    return os.str();
}

std::string cluster_betas_csv(const ClusterModelReport& report) {
    std::ostringstream os;
    os << "cluster";
    for (std::size_t j = 0; j < kSubratingCount; ++j) os << ",beta_" << kSubratingNames[j];
    os << "\n";
    for (std::size_t c = 0; c < report.clusters.size(); ++c) {
        if (!report.clusters[c].has_model) continue;
        os << c;
        for (double b : report.clusters[c].model.betas) os << ',' << format_double(b);
        os << "\n";
    }
    return os.str();
}

std::string mae_curve_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "k,avg_mae\n";
    for (std::size_t i = 0; i < report.avg_mae.size(); ++i)
        os << report.k_min + i << ',' << format_double(report.avg_mae[i]) << "\n";
    return os.str();
}

std::string scatter_csv(const ClusterModelReport& report) {
    std::ostringstream os;
    os << "index,pc1,pc2,cluster\n";
    for (std::size_t i = 0; i < report.projected.rows(); ++i)
        os << i << ',' << format_double(report.projected(i, 0)) << ','
           << format_double(report.projected(i, 1)) << ',' << report.kmeans.labels[i] << "\n";
    return os.str();
}

std::string centers_csv(const ClusterModelReport& report) {
    std::ostringstream os;
    os << "cluster,pc1,pc2\n";
    for (std::size_t c = 0; c < report.kmeans.k; ++c)
        os << c << ',' << format_double(report.kmeans.centers(c, 0)) << ','
           << format_double(report.kmeans.centers(c, 1)) << "\n";
    return os.str();
}

void write_text_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw_io("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw_io("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw_io("rename failed: " + path.string() + " (" + ec.message() + ")");
}

}  // namespace airrev
