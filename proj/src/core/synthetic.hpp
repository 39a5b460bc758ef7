#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "review.hpp"

namespace airrev {

// Planted-model corpus generator: per-category record counts and linear
// coefficients, uniform 1..5 sub-ratings, seeded noise. The oracle side of
// the regression tests.
struct SyntheticConfig {
    Feature feature = Feature::cabin;  // which categorical the groups define
    std::map<std::string, std::size_t> group_sizes;
    std::map<std::string, std::array<double, 6>> planted_betas;  // beta0..beta5
    double noise_scale = 0.0;
    std::uint64_t seed = 0;
    // Exact mode keeps the real-valued model output as the overall rating, so
    // noiseless fits recover the planted betas to machine precision. Rounded
    // mode clamps to the integer 1..10 scale of real review data.
    bool exact_emission = false;

    void validate() const;  // throws Error on inconsistency
};

SyntheticConfig parse_synthetic_config(std::string_view json_text);
std::string serialize_synthetic_config(const SyntheticConfig& config);

Corpus generate_synthetic(const SyntheticConfig& config);

}  // namespace airrev
