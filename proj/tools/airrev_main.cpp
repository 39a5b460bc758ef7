// airrev command line: corpus validation, both modeling branches, the k
// sweep, and synthetic corpus generation. Talks to the library through the
// C API only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "airrev.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 20140101;

struct CorpusDeleter {
    void operator()(airrev_corpus* c) const { airrev_corpus_free(c); }
};
struct ResultDeleter {
    void operator()(airrev_result* r) const { airrev_result_free(r); }
};
using CorpusPtr = std::unique_ptr<airrev_corpus, CorpusDeleter>;
using ResultPtr = std::unique_ptr<airrev_result, ResultDeleter>;

int exit_code_for(airrev_status status) {
    if (status == AIRREV_OK) return 0;
    return status == AIRREV_ERR_NUMERIC ? 2 : 1;
}

int report_failure(airrev_status status) {
    std::cerr << "error: " << airrev_last_error() << "\n";
    return exit_code_for(status);
}

CorpusPtr load_corpus(const std::string& path, airrev_status& status) {
    airrev_corpus* raw = nullptr;
    status = airrev_corpus_load(path.c_str(), &raw);
    return CorpusPtr(raw);
}

// Writes the report (plus plot files) when an output path is set, otherwise
// prints the rendered report.
int emit_result(const airrev_result* result, const std::string& output,
                const std::string& format) {
    if (output.empty()) {
        char* text = nullptr;
        airrev_status status = airrev_result_render(result, format.c_str(), &text);
        if (status != AIRREV_OK) return report_failure(status);
        std::cout << text;
        airrev_string_free(text);
        return 0;
    }
    airrev_status status = airrev_result_write(result, output.c_str(), format.c_str());
    if (status != AIRREV_OK) return report_failure(status);
    std::cout << "report written to " << output << "\n";
    return 0;
}

int run_validate(const std::string& input, const std::string& output) {
    airrev_status status;
    CorpusPtr corpus = load_corpus(input, status);
    if (!corpus) return report_failure(status);

    char* rejects = nullptr;
    status = airrev_corpus_rejection_report(corpus.get(), &rejects);
    if (status != AIRREV_OK) return report_failure(status);

    std::cout << airrev_corpus_size(corpus.get()) << " accepted, "
              << airrev_corpus_rejected(corpus.get()) << " rejected\n"
              << rejects;
    airrev_string_free(rejects);

    if (!output.empty()) {
        status = airrev_corpus_write_validation_report(corpus.get(), output.c_str());
        if (status != AIRREV_OK) return report_failure(status);
    }
    return 0;
}

int run_synth(const std::string& config_path, const std::string& output) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << config_path << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    airrev_corpus* raw = nullptr;
    airrev_status status = airrev_corpus_generate(buf.str().c_str(), &raw);
    CorpusPtr corpus(raw);
    if (!corpus) return report_failure(status);

    status = airrev_corpus_save(corpus.get(), output.c_str());
    if (status != AIRREV_OK) return report_failure(status);
    std::cout << "wrote " << airrev_corpus_size(corpus.get()) << " records to " << output << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"airrev: customer models from airline review ratings"};
    app.require_subcommand(1);

    std::string input, output, config_path;
    std::string feature = "cabin";
    std::string format = "text";
    std::string init = "paper";
    int k_min = 1, k_max = 10, repeats = 100, k = 6;
    std::uint64_t seed = kDefaultSeed;

    auto* validate = app.add_subcommand("validate", "parse a corpus and report rejected rows");
    validate->add_option("-i,--input", input, "corpus CSV")->required();
    validate->add_option("-o,--output", output, "write the validation report here");

    auto* feature_model =
        app.add_subcommand("feature-model", "per-group regression over a categorical feature");
    feature_model->add_option("-i,--input", input, "corpus CSV")->required();
    feature_model->add_option("--group-by", feature, "cabin or airline")
        ->check(CLI::IsMember({"cabin", "airline"}));
    feature_model->add_option("-o,--output", output, "report path (plot data written alongside)");
    feature_model->add_option("--format", format, "text or tabular")
        ->check(CLI::IsMember({"text", "structured-text", "tabular"}));

    auto* sweep = app.add_subcommand("sweep", "average clustered-regression MAE across k");
    sweep->add_option("-i,--input", input, "corpus CSV")->required();
    sweep->add_option("--k-min", k_min, "lowest k")->check(CLI::PositiveNumber);
    sweep->add_option("--k-max", k_max, "highest k")->check(CLI::PositiveNumber);
    sweep->add_option("--repeats", repeats, "runs per k")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "master seed");
    sweep->add_option("-o,--output", output, "report path (plot data written alongside)");
    sweep->add_option("--format", format, "text or tabular")
        ->check(CLI::IsMember({"text", "structured-text", "tabular"}));

    auto* cluster =
        app.add_subcommand("cluster-model", "PCA + k-means + per-cluster regression");
    cluster->add_option("-i,--input", input, "corpus CSV")->required();
    cluster->add_option("--k", k, "cluster count")->check(CLI::PositiveNumber);
    cluster->add_option("--init", init, "paper (fixed centers, k=6) or random")
        ->check(CLI::IsMember({"paper", "random"}));
    cluster->add_option("--seed", seed, "seed for random init");
    cluster->add_option("-o,--output", output, "report path (plot data written alongside)");
    cluster->add_option("--format", format, "text or tabular")
        ->check(CLI::IsMember({"text", "structured-text", "tabular"}));

    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    synth->add_option("--config", config_path, "JSON generator config")->required();
    synth->add_option("-o,--output", output, "corpus CSV to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    if (validate->parsed()) return run_validate(input, output);
    if (synth->parsed()) return run_synth(config_path, output);

    airrev_status status;
    CorpusPtr corpus = load_corpus(input, status);
    if (!corpus) return report_failure(status);

    airrev_result* raw = nullptr;
    if (feature_model->parsed()) {
        status = airrev_run_feature_model(corpus.get(), feature.c_str(), &raw);
    } else if (sweep->parsed()) {
        status = airrev_run_sweep(corpus.get(), k_min, k_max, repeats, seed, &raw);
    } else {
        status = airrev_run_cluster_model(corpus.get(), k, init.c_str(), seed, &raw);
    }
    ResultPtr result(raw);
    if (!result) return report_failure(status);
    return emit_result(result.get(), output, format);
}
