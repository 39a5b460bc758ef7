// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Oracle- and property-based; runs against the in-process library,
// the bundled synthetic corpus, and the installed CLI.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/format.hpp"
#include "core/pipeline.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"
#include "core/synthetic.hpp"
#include "corpora.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace airrev;

namespace {

const std::string kCli = AIRREV_CLI_PATH;
const fs::path kBundledCorpus = fs::path(AIRREV_DATA_DIR) / "synthetic_reviews_1494.csv";

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Corpus load_bundled() {
    return parse_corpus(slurp(kBundledCorpus), kBundledCorpus.string()).corpus;
}

int run_cli(const std::string& args) {
    const int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<double> overall_of(const Corpus& corpus) {
    std::vector<double> y(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) y[i] = corpus.records[i].overall_rating;
    return y;
}

// ---- criterion 1: OLS vs normal equations ------------------------------

Check ols_oracle_equivalence() {
    Check check;
    Rng rng(20140101);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 7 + rng.next_index(14);  // <= 20
        Matrix x(m, kSubratingCount);
        std::vector<double> y(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < kSubratingCount; ++j) x(i, j) = 2.0 * rng.next_int(1, 5);
            y[i] = 1.0 + 9.0 * rng.next_unit();
        }
        const RegressionModel model = fit_ols(x, y);
        if (model.rank_deficient) continue;

        Matrix augmented(m, kSubratingCount + 1);
        for (std::size_t i = 0; i < m; ++i) {
            augmented(i, 0) = 1.0;
            for (std::size_t j = 0; j < kSubratingCount; ++j) augmented(i, j + 1) = x(i, j);
        }
        const auto expected = oracles::normal_equations_fit(augmented, y);
        worst = std::max(worst, std::abs(model.beta0 - expected[0]));
        for (std::size_t j = 0; j < kSubratingCount; ++j)
            worst = std::max(worst, std::abs(model.betas[j] - expected[j + 1]));
    }
    check.require(worst < 1e-6, "max |beta - oracle| = " + format_double(worst));
    if (check.ok) check.detail = "max |beta - oracle| = " + format_double(worst);
    return check;
}

// ---- criterion 2: noiseless recovery at paper scale ---------------------

Check noiseless_recovery() {
    Check check;
    SyntheticConfig config = corpora::three_cabin_config(381, 1002, 111);
    config.noise_scale = 0.0;
    config.exact_emission = true;
    config.seed = 8;
    const Corpus corpus = generate_synthetic(config);
    check.require(corpus.size() == 1494, "corpus size != 1494");

    const FeatureModelReport report = feature_based_modeling(corpus, Feature::cabin);
    double worst = 0.0;
    for (const auto& [category, gm] : report.groups) {
        const auto& planted = config.planted_betas.at(category);
        worst = std::max(worst, std::abs(gm.model.beta0 - planted[0]));
        for (std::size_t j = 0; j < kSubratingCount; ++j)
            worst = std::max(worst, std::abs(gm.model.betas[j] - planted[j + 1]));
    }
    check.require(worst < 1e-6, "max planted-beta error = " + format_double(worst));
    if (check.ok)
        check.detail = "1494 records, max planted-beta error = " + format_double(worst);
    return check;
}

// ---- criterion 3: eigen oracle ------------------------------------------

Check eigen_oracle() {
    Check check;
    Rng rng(3);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        SymmetricMatrix s(2);
        s.at(0, 0) = 4.0 * rng.next_unit() - 2.0;
        s.at(0, 1) = 4.0 * rng.next_unit() - 2.0;
        s.at(1, 1) = 4.0 * rng.next_unit() - 2.0;
        const auto expected = oracles::eigenvalues_2x2(s.at(0, 0), s.at(0, 1), s.at(1, 1));
        const EigenDecomposition dec = sym_eigen(s);
        worst = std::max(worst, std::abs(dec.eigenvalues[0] - expected[0]));
        worst = std::max(worst, std::abs(dec.eigenvalues[1] - expected[1]));
    }
    for (int trial = 0; trial < 100; ++trial) {
        SymmetricMatrix s(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j <= i; ++j) s.at(i, j) = 4.0 * rng.next_unit() - 2.0;
        const auto expected = oracles::eigenvalues_3x3(s);
        const EigenDecomposition dec = sym_eigen(s);
        for (std::size_t j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(dec.eigenvalues[j] - expected[j]));

        // reconstruction and trace invariants
        const Matrix dense = s.to_dense();
        const double norm = std::max(1.0, oracles::inf_norm(dense));
        double trace = 0.0, sum = 0.0;
        for (std::size_t i = 0; i < 3; ++i) trace += dense(i, i);
        for (double v : dec.eigenvalues) sum += v;
        check.require(std::abs(sum - trace) <= 1e-8 * std::max(1.0, std::abs(trace)),
                      "trace drift");
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                double acc = 0.0;
                for (std::size_t c = 0; c < 3; ++c)
                    acc += dec.eigenvectors(i, c) * dec.eigenvalues[c] * dec.eigenvectors(j, c);
                check.require(std::abs(acc - dense(i, j)) <= 1e-8 * norm, "reconstruction drift");
            }
        }
    }
    check.require(worst < 1e-9, "max eigenvalue error = " + format_double(worst));
    if (check.ok) check.detail = "max eigenvalue error = " + format_double(worst);
    return check;
}

// ---- criterion 4: PCA variance capture ----------------------------------

Check pca_variance_capture() {
    Check check;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        Matrix d(1494, 6);
        for (std::size_t i = 0; i < d.rows(); ++i) {
            for (std::size_t j = 0; j < 5; ++j) d(i, j) = 2.0 * rng.next_int(1, 5);
            d(i, 5) = rng.next_int(1, 10);
        }
        const PcaModel model = fit_pca(d, 2);
        const Matrix z = pca_transform(model, d);

        double captured = 0.0;
        for (std::size_t j = 0; j < 2; ++j) {
            double mean = 0.0;
            for (std::size_t i = 0; i < z.rows(); ++i) mean += z(i, j);
            mean /= static_cast<double>(z.rows());
            for (std::size_t i = 0; i < z.rows(); ++i)
                captured += (z(i, j) - mean) * (z(i, j) - mean);
        }
        const double expected = model.eigenvalues[0] + model.eigenvalues[1];
        check.require(std::abs(captured - expected) <= 1e-6 * expected,
                      "seed " + std::to_string(seed) + ": captured " + format_double(captured) +
                          " vs " + format_double(expected));
    }
    if (check.ok) check.detail = "5 corpora, m = 1494";
    return check;
}

// ---- criterion 5: k-means behavior --------------------------------------

Check kmeans_behavior() {
    Check check;

    // separated blobs: inter-center distance >= 40 > 4 * radius (~2.1)
    const double cx[] = {0, 40, 0, 40, 80, 0};
    const double cy[] = {0, 0, 40, 40, 0, 80};
    Rng rng(606);
    Matrix points(6 * 30, 2);
    std::vector<std::size_t> truth;
    for (std::size_t b = 0; b < 6; ++b) {
        for (std::size_t i = 0; i < 30; ++i) {
            points(b * 30 + i, 0) = cx[b] + 3.0 * rng.next_unit() - 1.5;
            points(b * 30 + i, 1) = cy[b] + 3.0 * rng.next_unit() - 1.5;
            truth.push_back(b);
        }
    }

    KMeansModel best;
    double best_sse = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        KMeansModel model = run_kmeans(points, InitSpec::random(seed), 6);
        for (std::size_t i = 1; i < model.sse_history.size(); ++i)
            check.require(model.sse_history[i] <= model.sse_history[i - 1],
                          "SSE increased during seed " + std::to_string(seed));
        check.require(model.converged && model.iterations < 500,
                      "no convergence before the iteration cap");
        if (model.sse < best_sse) {
            best_sse = model.sse;
            best = std::move(model);
        }
    }
    // exact recovery of the planted partition by the best restart
    std::vector<std::ptrdiff_t> map(6, -1);
    std::vector<bool> used(6, false);
    bool exact = true;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const std::size_t got = best.labels[i];
        if (map[truth[i]] == -1) {
            if (used[got]) exact = false;
            map[truth[i]] = static_cast<std::ptrdiff_t>(got);
            used[got] = true;
        } else if (map[truth[i]] != static_cast<std::ptrdiff_t>(got)) {
            exact = false;
        }
    }
    check.require(exact, "best-of-20 restarts missed the planted partition");

    // k = 1: center equals the global mean
    const KMeansModel single = run_kmeans(points, InitSpec::random(1), 1);
    const auto mean = mean_vector(points);
    check.require(std::abs(single.centers(0, 0) - mean[0]) < 1e-9 &&
                      std::abs(single.centers(0, 1) - mean[1]) < 1e-9,
                  "k = 1 center differs from the global mean");
    for (std::size_t i = 1; i < single.sse_history.size(); ++i)
        check.require(single.sse_history[i] <= single.sse_history[i - 1], "k = 1 SSE increased");

    if (check.ok) check.detail = "20 restarts, exact blob recovery, k = 1 mean";
    return check;
}

// ---- criterion 6: sweep identity, determinism, runtime ------------------

Check sweep_identity_and_determinism(const fs::path& work) {
    Check check;
    const Corpus corpus = load_bundled();
    check.require(corpus.size() == 1494, "bundled corpus missing or truncated");
    if (!check.ok) return check;

    const SweepReport k1 = sweep_k(corpus, 1, 1, 100, 555);
    const RegressionModel global = fit_ols(to_matrix(corpus, false), overall_of(corpus));
    check.require(k1.avg_mae[0] == global.mae, "avg_mae[1] != global regression MAE (exact)");

    const std::string args = "sweep -i " + kBundledCorpus.string() +
                             " --k-min 1 --k-max 10 --repeats 100 --seed 555 -o ";
    const fs::path r1 = work / "sweep_a.txt";
    const fs::path r2 = work / "sweep_b.txt";

    const auto t0 = std::chrono::steady_clock::now();
    check.require(run_cli(args + r1.string()) == 0, "first sweep run failed");
    const auto t1 = std::chrono::steady_clock::now();
    check.require(run_cli(args + r2.string()) == 0, "second sweep run failed");

    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    check.require(seconds < 30.0, "sweep took " + format_double(seconds) + " s");
    check.require(slurp(r1) == slurp(r2), "sweep reports differ between runs");
    check.require(slurp(work / "sweep_a_mae_curve.csv") == slurp(work / "sweep_b_mae_curve.csv"),
                  "sweep plot files differ between runs");
    if (check.ok)
        check.detail = "byte-identical 10x100 sweep in " + format_double(seconds) + " s";
    return check;
}

// ---- criterion 7: planted structure lowers the sweep error --------------

Check planted_structure_sweep() {
    Check check;
    const Corpus corpus = corpora::planted_six_segments();
    const SweepReport report = sweep_k(corpus, 1, 10, 100, 2468);
    check.require(report.avg_mae[5] < report.avg_mae[0],
                  "avg_mae[6] = " + format_double(report.avg_mae[5]) +
                      " not below avg_mae[1] = " + format_double(report.avg_mae[0]));
    for (std::size_t k = 6; k <= 10; ++k)
        check.require(report.avg_mae[k - 1] <= report.avg_mae[0],
                      "avg_mae[" + std::to_string(k) + "] above avg_mae[1]");
    if (check.ok)
        check.detail = "avg_mae[6] = " + format_double(report.avg_mae[5]) +
                       " < avg_mae[1] = " + format_double(report.avg_mae[0]);
    return check;
}

// ---- criterion 8: paper constants and conservation identities ------------

Check paper_constants_and_conservation() {
    Check check;
    const Matrix expected = Matrix::from_rows(
        {{7, 9}, {-14, 9}, {7, -7}, {-3.5, -3}, {-3.5, 5}, {-14, -7}});
    check.require(fixed_paper_centers() == expected, "fixed centers are not the six pairs");

    const Corpus bundled = load_bundled();
    const auto cabins = group_by_feature(bundled, Feature::cabin);
    const std::vector<std::pair<std::string, InitSpec>> runs = {
        {"paper", InitSpec::fixed(fixed_paper_centers())},
        {"random", InitSpec::random(31337)},
    };
    for (const auto& [name, init] : runs) {
        const ClusterModelReport report = cluster_based_modeling(bundled, init, 6);
        std::size_t total = 0, business = 0, economy = 0, premium = 0;
        for (const ClusterModel& cm : report.clusters) {
            total += cm.stats.total;
            business += cm.stats.business;
            economy += cm.stats.economy;
            premium += cm.stats.premium_economy;
            check.require(cm.stats.total == cm.stats.business + cm.stats.economy +
                                                cm.stats.premium_economy,
                          name + ": cabin columns do not sum to the cluster total");
        }
        check.require(total == bundled.size(), name + ": cluster totals miss the corpus size");
        check.require(business == cabins.at("business").size() &&
                          economy == cabins.at("economy").size() &&
                          premium == cabins.at("premium_economy").size(),
                      name + ": cabin columns miss the corpus-wide counts");
    }
    if (check.ok) check.detail = "six fixed pairs, totals conserved on paper and random runs";
    return check;
}

// ---- criterion 9: end-to-end reproducibility ------------------------------

Check end_to_end_reproducibility(const fs::path& work) {
    Check check;
    const std::string args = "cluster-model -i " + kBundledCorpus.string() +
                             " --k 6 --init paper --seed 555 -o ";
    const fs::path r1 = work / "cluster_a.txt";
    const fs::path r2 = work / "cluster_b.txt";
    check.require(run_cli(args + r1.string()) == 0, "first cluster-model run failed");
    check.require(run_cli(args + r2.string()) == 0, "second cluster-model run failed");
    check.require(slurp(r1) == slurp(r2), "reports differ");
    for (const char* suffix : {"_betas.csv", "_scatter.csv", "_centers.csv"}) {
        check.require(slurp(work / ("cluster_a" + std::string(suffix))) ==
                          slurp(work / ("cluster_b" + std::string(suffix))),
                      std::string("plot file ") + suffix + " differs");
    }
    check.require(!slurp(work / "cluster_a_scatter.csv").empty(), "scatter data missing");
    if (check.ok) check.detail = "reports and projected coordinates byte-identical";
    return check;
}

}  // namespace

int main() {
    const fs::path work = fs::temp_directory_path() / "airrev_acceptance";
    fs::create_directories(work);

    struct Criterion {
        int id;
        std::string name;
        double budget_seconds;  // 0 = untimed
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "OLS oracle equivalence", 1.0, ols_oracle_equivalence},
        {2, "noiseless planted-beta recovery at paper scale", 1.0, noiseless_recovery},
        {3, "eigenvalues match characteristic-polynomial roots", 1.0, eigen_oracle},
        {4, "PCA 2-D projection captures the top-2 scatter", 0.0, pca_variance_capture},
        {5, "k-means monotonicity, blob recovery, k = 1 mean", 0.0, kmeans_behavior},
        {6, "sweep identity, determinism and runtime", 0.0,
         [&work] { return sweep_identity_and_determinism(work); }},
        {7, "planted structure: avg_mae[6] < avg_mae[1]", 0.0, planted_structure_sweep},
        {8, "paper constants and conservation identities", 0.0,
         paper_constants_and_conservation},
        {9, "cluster-model end-to-end reproducibility", 0.0,
         [&work] { return end_to_end_reproducibility(work); }},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            check = criterion.run();
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criterion.budget_seconds > 0.0 && seconds >= criterion.budget_seconds) {
            check.ok = false;
            check.detail = "exceeded " + format_double(criterion.budget_seconds) + " s budget";
        }

        std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
                  << criterion.name;
        if (!check.detail.empty()) std::cout << " — " << check.detail;
        std::cout << " [" << format_double(seconds) << " s]\n";
        if (!check.ok) ++failures;
    }

    std::error_code ec;
    fs::remove_all(work, ec);
    return failures;
}
