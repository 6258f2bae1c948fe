#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "kaccoh/cohomology/cohomology.hpp"

namespace kaccoh {

/// One (a, b) instance of the H^1 table.
struct ScanRow {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t phi_b_minus_a = 0;
    std::size_t dim_K = 0;
    std::size_t der_even = 0;
    std::size_t der_odd = 0;
    std::size_t ider = 0;
    std::size_t h1 = 0;
    unsigned predicted = 0;
    bool agrees = false;
    bool operator==(const ScanRow&) const = default;
};

ScanRow scan_instance(const std::shared_ptr<const Superalgebra>& g, HighestWeight lambda);

/// All p^2 instances in (a, b) lexicographic order. Instances are spread over
/// `jobs` OpenMP threads (0 = runtime default); the result does not depend on
/// `jobs`. A RouteDisagreement in any instance is rethrown after the sweep.
std::vector<ScanRow> scan(std::int64_t p, int jobs = 0);
std::vector<ScanRow> scan_serial(std::int64_t p);

struct ScanSummary {
    std::size_t rows = 0;
    std::map<std::size_t, std::size_t> h1_counts;
    std::vector<ScanRow> disagreements;
    std::size_t clause_overlaps = 0;
};

ScanSummary summarize(std::int64_t p, const std::vector<ScanRow>& rows);

inline constexpr const char* kScanCsvHeader = "a,b,phi_b_minus_a,dim_K,der_even,der_odd,ider,h1,predicted,agrees";

std::string scan_to_csv(const std::vector<ScanRow>& rows);
nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);
/// Parses the CSV written by scan_to_csv; throws std::invalid_argument.
std::vector<ScanRow> scan_from_csv(const std::string& text);
std::vector<ScanRow> scan_from_json(const nlohmann::json& doc);

std::string summary_line(const ScanSummary& s);

} // namespace kaccoh
