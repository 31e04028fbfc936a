#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace vsz::cli {

struct AlphaRow {
    double alpha = 0.0;
    double wiener = 0.0;
    double szeged = 0.0;
    double h = 0.0;

    friend bool operator==(const AlphaRow&, const AlphaRow&) = default;
};

struct RootRow {
    double alpha = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::string derivative;  // "-", "0" or "+"
    bool exact = false;

    friend bool operator==(const RootRow&, const RootRow&) = default;
};

struct TangencyRow {
    double lo = 0.0;
    double hi = 0.0;
    double min_abs_h = 0.0;

    friend bool operator==(const TangencyRow&, const TangencyRow&) = default;
};

struct ScanRow {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// One analysis as printed by the CLI, in key=value or JSON form.
struct AnalysisRecord {
    std::string input;
    std::optional<std::uint64_t> seed;
    std::string status = "ok";  // "ok" or "degenerate"
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t N = 0;
    std::int64_t diameter = 0;
    std::int64_t wiener = 0;
    std::int64_t szeged = 0;
    std::vector<AlphaRow> alphas;
    std::optional<ScanRow> scan;
    std::vector<RootRow> roots;
    std::vector<TangencyRow> tangencies;
    std::optional<std::string> strong_verdict;
    std::optional<std::string> certificate;
    std::vector<std::string> certificates;
    std::optional<std::size_t> crossing_index;
    std::optional<bool> weak_check;
    double time_ms = 0.0;

    friend bool operator==(const AnalysisRecord&, const AnalysisRecord&) = default;
};

void to_json(nlohmann::json& j, const AnalysisRecord& r);
void from_json(const nlohmann::json& j, AnalysisRecord& r);

/// Shortest decimal form that reads back to the same double (up to 17 digits).
std::string format_double(double x);

void write_key_values(std::ostream& os, const AnalysisRecord& r);

}  // namespace vsz::cli
