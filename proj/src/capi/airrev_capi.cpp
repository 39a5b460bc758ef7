#include "airrev.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "core/error.hpp"
#include "core/pipeline.hpp"
#include "core/report.hpp"
#include "core/synthetic.hpp"

using namespace airrev;

namespace {

thread_local std::string t_last_error;

airrev_status status_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::argument: return AIRREV_ERR_ARGUMENT;
        case ErrorKind::io: return AIRREV_ERR_IO;
        case ErrorKind::parse: return AIRREV_ERR_PARSE;
        case ErrorKind::numeric: return AIRREV_ERR_NUMERIC;
    }
    return AIRREV_ERR_ARGUMENT;
}

airrev_status fail(airrev_status s, std::string message) {
    t_last_error = std::move(message);
    return s;
}

template <typename Fn>
airrev_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return AIRREV_OK;
    } catch (const Error& e) {
        return fail(status_of(e), e.what());
    } catch (const std::exception& e) {
        return fail(AIRREV_ERR_ARGUMENT, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io(std::string("cannot open: ") + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw_io(std::string("read failed: ") + path);
    return os.str();
}

}  // namespace

struct airrev_corpus {
    Corpus corpus;
    std::vector<Rejection> rejections;
};

struct airrev_result {
    RunInfo info;
    std::string init_name;  // cluster-model only
    std::variant<FeatureModelReport, SweepReport, ClusterModelReport> payload;
};

extern "C" {

const char* airrev_version(void) { return "0.1.0"; }

const char* airrev_last_error(void) { return t_last_error.c_str(); }

void airrev_string_free(char* text) { std::free(text); }

airrev_status airrev_corpus_load(const char* path, airrev_corpus** out) {
    if (!path || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        ParseResult parsed = parse_corpus(read_file(path), path);
        *out = new airrev_corpus{std::move(parsed.corpus), std::move(parsed.rejections)};
    });
}

airrev_status airrev_corpus_parse(const char* text, const char* label, airrev_corpus** out) {
    if (!text || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        ParseResult parsed = parse_corpus(text, label ? label : "memory");
        *out = new airrev_corpus{std::move(parsed.corpus), std::move(parsed.rejections)};
    });
}

airrev_status airrev_corpus_generate(const char* config_json, airrev_corpus** out) {
    if (!config_json || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const SyntheticConfig config = parse_synthetic_config(config_json);
        *out = new airrev_corpus{generate_synthetic(config), {}};
    });
}

airrev_status airrev_corpus_save(const airrev_corpus* corpus, const char* path) {
    if (!corpus || !path) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] { write_text_atomic(path, serialize_corpus(corpus->corpus)); });
}

void airrev_corpus_free(airrev_corpus* corpus) { delete corpus; }

int64_t airrev_corpus_size(const airrev_corpus* corpus) {
    return corpus ? static_cast<int64_t>(corpus->corpus.size()) : 0;
}

int64_t airrev_corpus_rejected(const airrev_corpus* corpus) {
    return corpus ? static_cast<int64_t>(corpus->rejections.size()) : 0;
}

airrev_status airrev_corpus_rejection_report(const airrev_corpus* corpus, char** out) {
    if (!corpus || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = dup_string(rejection_report(corpus->rejections)); });
}

airrev_status airrev_corpus_write_validation_report(const airrev_corpus* corpus,
                                                    const char* path) {
    if (!corpus || !path) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        RunInfo info{corpus->corpus.source_label, corpus->corpus.size(),
                     corpus->rejections.size(), 0};
        write_text_atomic(path, render_validate_report(info, corpus->rejections));
    });
}

airrev_status airrev_run_feature_model(const airrev_corpus* corpus, const char* feature,
                                       airrev_result** out) {
    if (!corpus || !feature || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto report = feature_based_modeling(corpus->corpus, feature_from_name(feature));
        RunInfo info{corpus->corpus.source_label, corpus->corpus.size(),
                     corpus->rejections.size(), 0};
        *out = new airrev_result{info, {}, std::move(report)};
    });
}

airrev_status airrev_run_sweep(const airrev_corpus* corpus, int k_min, int k_max, int repeats,
                               uint64_t master_seed, airrev_result** out) {
    if (!corpus || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    if (k_min < 1 || k_max < k_min || repeats < 1)
        return fail(AIRREV_ERR_ARGUMENT, "need 1 <= k_min <= k_max and repeats >= 1");
    return guarded([&] {
        auto report = sweep_k(corpus->corpus, static_cast<std::size_t>(k_min),
                              static_cast<std::size_t>(k_max),
                              static_cast<std::size_t>(repeats), master_seed);
        RunInfo info{corpus->corpus.source_label, corpus->corpus.size(),
                     corpus->rejections.size(), master_seed};
        *out = new airrev_result{info, {}, std::move(report)};
    });
}

airrev_status airrev_run_cluster_model(const airrev_corpus* corpus, int k, const char* init,
                                       uint64_t seed, airrev_result** out) {
    if (!corpus || !init || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    if (k < 1) return fail(AIRREV_ERR_ARGUMENT, "k must be positive");
    return guarded([&] {
        InitSpec spec;
        if (std::strcmp(init, "paper") == 0) {
            if (k != 6) throw_argument("paper init requires k = 6");
            spec = InitSpec::fixed(fixed_paper_centers());
        } else if (std::strcmp(init, "random") == 0) {
            spec = InitSpec::random(seed);
        } else {
            throw_argument(std::string("unknown init mode: ") + init);
        }
        auto report = cluster_based_modeling(corpus->corpus, spec, static_cast<std::size_t>(k));
        RunInfo info{corpus->corpus.source_label, corpus->corpus.size(),
                     corpus->rejections.size(), seed};
        *out = new airrev_result{info, init, std::move(report)};
    });
}

const char* airrev_result_kind(const airrev_result* result) {
    if (!result) return "";
    if (std::holds_alternative<FeatureModelReport>(result->payload)) return "feature-model";
    if (std::holds_alternative<SweepReport>(result->payload)) return "sweep";
    return "cluster-model";
}

airrev_status airrev_result_render(const airrev_result* result, const char* format, char** out) {
    if (!result || !format || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const ReportFormat fmt = report_format_from_name(format);
        std::string text;
        if (const auto* fr = std::get_if<FeatureModelReport>(&result->payload))
            text = render_feature_report(result->info, *fr, fmt);
        else if (const auto* sr = std::get_if<SweepReport>(&result->payload))
            text = render_sweep_report(result->info, *sr, fmt);
        else
            text = render_cluster_report(result->info,
                                         std::get<ClusterModelReport>(result->payload),
                                         result->init_name, fmt);
        *out = dup_string(text);
    });
}

airrev_status airrev_result_write(const airrev_result* result, const char* report_path,
                                  const char* format) {
    if (!result || !report_path || !format) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        char* text = nullptr;
        airrev_status s = airrev_result_render(result, format, &text);
        if (s != AIRREV_OK) throw Error(ErrorKind::argument, t_last_error);
        const std::string report(text);
        airrev_string_free(text);

        const std::filesystem::path path(report_path);
        write_text_atomic(path, report);

        auto sibling = [&path](const char* suffix) {
            std::filesystem::path p = path.parent_path() / path.stem();
            p += suffix;
            return p;
        };
        if (const auto* fr = std::get_if<FeatureModelReport>(&result->payload)) {
            write_text_atomic(sibling("_betas.csv"), feature_betas_csv(*fr));
        } else if (const auto* sr = std::get_if<SweepReport>(&result->payload)) {
            write_text_atomic(sibling("_mae_curve.csv"), mae_curve_csv(*sr));
        } else {
            const auto& cr = std::get<ClusterModelReport>(result->payload);
            write_text_atomic(sibling("_betas.csv"), cluster_betas_csv(cr));
            write_text_atomic(sibling("_scatter.csv"), scatter_csv(cr));
            write_text_atomic(sibling("_centers.csv"), centers_csv(cr));
        }
    });
}

airrev_status airrev_result_avg_mae(const airrev_result* result, int k, double* out) {
    if (!result || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    const auto* sr = std::get_if<SweepReport>(&result->payload);
    if (!sr) return fail(AIRREV_ERR_ARGUMENT, "not a sweep result");
    if (k < static_cast<int>(sr->k_min) || k > static_cast<int>(sr->k_max))
        return fail(AIRREV_ERR_ARGUMENT, "k outside the swept range");
    *out = sr->avg_mae[static_cast<std::size_t>(k) - sr->k_min];
    t_last_error.clear();
    return AIRREV_OK;
}

airrev_status airrev_result_cluster_total(const airrev_result* result, int cluster,
                                          int64_t* out) {
    if (!result || !out) return fail(AIRREV_ERR_ARGUMENT, "null argument");
    const auto* cr = std::get_if<ClusterModelReport>(&result->payload);
    if (!cr) return fail(AIRREV_ERR_ARGUMENT, "not a cluster-model result");
    if (cluster < 0 || cluster >= static_cast<int>(cr->clusters.size()))
        return fail(AIRREV_ERR_ARGUMENT, "cluster index out of range");
    *out = static_cast<int64_t>(cr->clusters[static_cast<std::size_t>(cluster)].stats.total);
    t_last_error.clear();
    return AIRREV_OK;
}

void airrev_result_free(airrev_result* result) { delete result; }

}  // extern "C"
