#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "matrix.hpp"

namespace airrev {

inline constexpr std::size_t kSubratingCount = 5;

// Column order is fixed globally; beta_1..beta_5 follow it everywhere.
inline constexpr std::array<std::string_view, kSubratingCount> kSubratingNames = {
    "value_money", "seat_comfort", "staff_service", "catering", "entertainment"};

inline constexpr std::array<std::string_view, 3> kCabinNames = {
    "business", "economy", "premium_economy"};

struct ReviewRecord {
    std::string airline;
    std::string cabin;  // one of kCabinNames
    bool recommended = false;
    // Integer 1..10 for parsed data; the synthetic generator's exact
    // emission mode stores the unrounded model value here.
    double overall_rating = 0.0;
    std::array<int, kSubratingCount> subratings{};  // raw 1..5

    friend bool operator==(const ReviewRecord&, const ReviewRecord&) = default;
};

struct Corpus {
    std::vector<ReviewRecord> records;  // input order; index is customer identity
    std::string source_label;

    std::size_t size() const { return records.size(); }

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct Rejection {
    std::size_t line = 0;  // 1-based line number in the input
    std::string reason;    // first failure only
};

struct ParseResult {
    Corpus corpus;
    std::vector<Rejection> rejections;
};

enum class Feature { cabin, airline };

inline constexpr std::string_view kCsvHeader =
    "airline,cabin,recommended,rating,value_money,seat_comfort,staff_service,"
    "catering,entertainment";

// Parses the documented comma-delimited format. Bad rows are rejected with a
// reason, a bad header or an all-rejected input is fatal.
ParseResult parse_corpus(std::string_view text, std::string source_label);

// Inverse of parse_corpus for integer-rated corpora; exact-emission ratings
// are written as-is and will not re-parse.
std::string serialize_corpus(const Corpus& corpus);

std::string rejection_report(const std::vector<Rejection>& rejections);

// Raw 1..5 sub-ratings mapped to the 2..10 scale of the overall rating.
std::array<double, kSubratingCount> double_subratings(const ReviewRecord& record);

// m x 6 (doubled sub-ratings + overall rating) or m x 5 without the overall.
Matrix to_matrix(const Corpus& corpus, bool include_overall);

// Category token -> ascending record indices; every index in exactly one group.
std::map<std::string, std::vector<std::size_t>> group_by_feature(const Corpus& corpus,
                                                                 Feature feature);

const std::string& feature_name(Feature feature);
Feature feature_from_name(std::string_view name);

}  // namespace airrev
