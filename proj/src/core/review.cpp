#include "review.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "error.hpp"
#include "format.hpp"

namespace airrev {

namespace {

bool parse_int(std::string_view token, int& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool valid_cabin(std::string_view token) {
    return std::find(kCabinNames.begin(), kCabinNames.end(), token) != kCabinNames.end();
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

// First failure wins; checks run in column order.
std::string parse_row(const std::vector<std::string_view>& fields, ReviewRecord& rec) {
    if (fields.size() != 9) return "expected 9 fields";
    for (std::string_view f : fields)
        if (f.empty()) return "missing field";

    rec.airline = std::string(fields[0]);
    if (!valid_cabin(fields[1])) return "invalid cabin";
    rec.cabin = std::string(fields[1]);

    if (fields[2] == "0")
        rec.recommended = false;
    else if (fields[2] == "1")
        rec.recommended = true;
    else
        return "invalid recommended flag";

    int rating = 0;
    if (!parse_int(fields[3], rating)) return "invalid rating";
    if (rating < 1 || rating > 10) return "rating out of range 1..10";
    rec.overall_rating = static_cast<double>(rating);

    for (std::size_t j = 0; j < kSubratingCount; ++j) {
        int sub = 0;
        if (!parse_int(fields[4 + j], sub)) return "invalid sub-rating";
        if (sub < 1 || sub > 5) return "sub-rating out of range 1..5";
        rec.subratings[j] = sub;
    }
    return {};
}

}  // namespace

ParseResult parse_corpus(std::string_view text, std::string source_label) {
    if (text.starts_with("\xef\xbb\xbf")) text.remove_prefix(3);

    ParseResult result;
    result.corpus.source_label = std::move(source_label);

    std::size_t line_no = 0;
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        if (line.ends_with('\r')) line.remove_suffix(1);
        ++line_no;

        if (!saw_header) {
            if (line != kCsvHeader)
                throw_parse("malformed header, expected: " + std::string(kCsvHeader));
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;

        ReviewRecord rec;
        std::string reason = parse_row(split_fields(line), rec);
        if (reason.empty())
            result.corpus.records.push_back(std::move(rec));
        else
            result.rejections.push_back({line_no, std::move(reason)});
    }

    if (!saw_header) throw_parse("empty input, expected header line");
    if (result.corpus.records.empty()) throw_parse("no valid rows in input");
    return result;
}

std::string serialize_corpus(const Corpus& corpus) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const ReviewRecord& rec : corpus.records) {
        out += rec.airline;
        out.push_back(',');
        out += rec.cabin;
        out.push_back(',');
        out += rec.recommended ? '1' : '0';
        out.push_back(',');
        out += format_rating(rec.overall_rating);
        for (int sub : rec.subratings) {
            out.push_back(',');
            out += std::to_string(sub);
        }
        out.push_back('\n');
    }
    return out;
}

std::string rejection_report(const std::vector<Rejection>& rejections) {
    std::string out;
    for (const Rejection& r : rejections) {
        out += "line " + std::to_string(r.line) + ": " + r.reason + "\n";
    }
    return out;
}

std::array<double, kSubratingCount> double_subratings(const ReviewRecord& record) {
    std::array<double, kSubratingCount> scaled{};
    for (std::size_t j = 0; j < kSubratingCount; ++j)
        scaled[j] = 2.0 * static_cast<double>(record.subratings[j]);
    return scaled;
}

Matrix to_matrix(const Corpus& corpus, bool include_overall) {
    if (corpus.records.empty()) throw_argument("to_matrix: empty corpus");
    const std::size_t cols = include_overall ? kSubratingCount + 1 : kSubratingCount;
    Matrix m(corpus.size(), cols);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto scaled = double_subratings(corpus.records[i]);
        for (std::size_t j = 0; j < kSubratingCount; ++j) m(i, j) = scaled[j];
        if (include_overall) m(i, kSubratingCount) = corpus.records[i].overall_rating;
    }
    return m;
}

std::map<std::string, std::vector<std::size_t>> group_by_feature(const Corpus& corpus,
                                                                 Feature feature) {
    if (corpus.records.empty()) throw_argument("group_by_feature: empty corpus");
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const ReviewRecord& rec = corpus.records[i];
        const std::string& key = feature == Feature::cabin ? rec.cabin : rec.airline;
        groups[key].push_back(i);
    }
    return groups;
}

const std::string& feature_name(Feature feature) {
    static const std::string cabin = "cabin";
    static const std::string airline = "airline";
    return feature == Feature::cabin ? cabin : airline;
}

Feature feature_from_name(std::string_view name) {
    if (name == "cabin") return Feature::cabin;
    if (name == "airline") return Feature::airline;
    throw_argument("unknown feature: " + std::string(name));
}

}  // namespace airrev
