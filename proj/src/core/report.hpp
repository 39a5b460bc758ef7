#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace airrev {

inline constexpr std::string_view kReportFormatTag = "airrev/1";

enum class ReportFormat { text, tabular };
ReportFormat report_format_from_name(std::string_view name);

// Header lines shared by every report: the full effective configuration of
// the run, in fixed key order.
struct RunInfo {
    std::string input;  // corpus source label
    std::size_t records = 0;
    std::size_t rejected = 0;
    std::uint64_t master_seed = 0;
};

std::string render_validate_report(const RunInfo& info, const std::vector<Rejection>& rejections);
std::string render_feature_report(const RunInfo& info, const FeatureModelReport& report,
                                  ReportFormat format);
std::string render_sweep_report(const RunInfo& info, const SweepReport& report,
                                ReportFormat format);
std::string render_cluster_report(const RunInfo& info, const ClusterModelReport& report,
                                  const std::string& init_name, ReportFormat format);

// Plot-ready series, one header row, comma delimiter.
std::string feature_betas_csv(const FeatureModelReport& report);
std::string cluster_betas_csv(const ClusterModelReport& report);
std::string mae_curve_csv(const SweepReport& report);
std::string scatter_csv(const ClusterModelReport& report);
std::string centers_csv(const ClusterModelReport& report);

// Temp-file-and-rename write; interrupted runs never leave partial output.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace airrev
