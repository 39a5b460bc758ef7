#include "synthetic.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "error.hpp"
#include "rng.hpp"

namespace airrev {

namespace {

// Airline tokens used when the grouping feature is the cabin.
constexpr std::array<std::string_view, 5> kSyntheticAirlines = {
    "aquila_air", "boreal", "cumulus", "dorado", "elara_airways"};

}  // namespace

void SyntheticConfig::validate() const {
    if (group_sizes.empty()) throw_argument("synthetic config: no groups");
    if (!(noise_scale >= 0.0)) throw_argument("synthetic config: noise_scale must be >= 0");
    for (const auto& [category, count] : group_sizes) {
        if (category.empty()) throw_argument("synthetic config: empty category name");
        if (count == 0) throw_argument("synthetic config: group '" + category + "' has count 0");
        if (!planted_betas.contains(category))
            throw_argument("synthetic config: no betas for group '" + category + "'");
    }
    for (const auto& [category, betas] : planted_betas) {
        if (!group_sizes.contains(category))
            throw_argument("synthetic config: betas for unknown group '" + category + "'");
        for (double b : betas)
            if (!std::isfinite(b))
                throw_argument("synthetic config: non-finite beta in group '" + category + "'");
    }
    if (feature == Feature::cabin) {
        for (const auto& [category, count] : group_sizes) {
            (void)count;
            if (std::find(kCabinNames.begin(), kCabinNames.end(), category) == kCabinNames.end())
                throw_argument("synthetic config: '" + category + "' is not a cabin category");
        }
    }
}

SyntheticConfig parse_synthetic_config(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("synthetic config: ") + e.what());
    }
    SyntheticConfig config;
    try {
        if (j.contains("feature")) config.feature = feature_from_name(j["feature"].get<std::string>());
        for (const auto& [key, value] : j.at("group_sizes").items()) {
            const auto count = value.get<std::int64_t>();
            if (count < 0) throw_argument("synthetic config: negative count for '" + key + "'");
            config.group_sizes[key] = static_cast<std::size_t>(count);
        }
        for (const auto& [key, value] : j.at("planted_betas").items()) {
            const auto betas = value.get<std::vector<double>>();
            if (betas.size() != 6)
                throw_argument("synthetic config: group '" + key + "' needs 6 betas (beta0..beta5)");
            std::array<double, 6> arr{};
            std::copy(betas.begin(), betas.end(), arr.begin());
            config.planted_betas[key] = arr;
        }
        config.noise_scale = j.value("noise_scale", 0.0);
        config.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("emission")) {
            const auto mode = j["emission"].get<std::string>();
            if (mode == "exact")
                config.exact_emission = true;
            else if (mode == "rounded")
                config.exact_emission = false;
            else
                throw_argument("synthetic config: emission must be 'exact' or 'rounded'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("synthetic config: ") + e.what());
    }
    config.validate();
    return config;
}

std::string serialize_synthetic_config(const SyntheticConfig& config) {
    nlohmann::json j;
    j["feature"] = feature_name(config.feature);
    for (const auto& [key, count] : config.group_sizes) j["group_sizes"][key] = count;
    for (const auto& [key, betas] : config.planted_betas) j["planted_betas"][key] = betas;
    j["noise_scale"] = config.noise_scale;
    j["seed"] = config.seed;
    j["emission"] = config.exact_emission ? "exact" : "rounded";
    return j.dump(2) + "\n";
}

Corpus generate_synthetic(const SyntheticConfig& config) {
    config.validate();
    Rng rng(config.seed);
    Corpus corpus;
    corpus.source_label = "synthetic";

    for (const auto& [category, count] : config.group_sizes) {
        const std::array<double, 6>& betas = config.planted_betas.at(category);
        for (std::size_t i = 0; i < count; ++i) {
            ReviewRecord rec;
            for (std::size_t j = 0; j < kSubratingCount; ++j)
                rec.subratings[j] = rng.next_int(1, 5);

            if (config.feature == Feature::cabin) {
                rec.cabin = category;
                rec.airline = std::string(kSyntheticAirlines[rng.next_index(kSyntheticAirlines.size())]);
            } else {
                rec.airline = category;
                rec.cabin = std::string(kCabinNames[rng.next_index(kCabinNames.size())]);
            }

            double value = betas[0];
            for (std::size_t j = 0; j < kSubratingCount; ++j)
                value += betas[j + 1] * (2.0 * rec.subratings[j]);
            value += config.noise_scale * rng.next_gaussian();

            rec.recommended = value >= 6.0;
            if (config.exact_emission) {
                rec.overall_rating = value;
            } else {
                const double rounded = std::nearbyint(value);
                rec.overall_rating = std::clamp(rounded, 1.0, 10.0);
            }
            corpus.records.push_back(std::move(rec));
        }
    }
    return corpus;
}

}  // namespace airrev
