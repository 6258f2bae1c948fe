#include "kaccoh/cohomology/scan.hpp"

#include <exception>
#include <sstream>

#include <fmt/format.h>

#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/module/phi.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kaccoh {

ScanRow scan_instance(const std::shared_ptr<const Superalgebra>& g, HighestWeight lambda)
{
    const auto k = build_kac_module(g, lambda);
    const auto comp = compute_h1(k.module());
    ScanRow row;
    row.a = lambda.a;
    row.b = lambda.b;
    row.phi_b_minus_a = k.top_index();
    row.dim_K = k.dim();
    row.der_even = comp.dims.der_even;
    row.der_odd = comp.dims.der_odd;
    row.ider = comp.dims.ider_even + comp.dims.ider_odd;
    row.h1 = comp.dims.h1_total;
    row.predicted = predict_h1(g->field(), lambda);
    row.agrees = row.h1 == row.predicted;
    return row;
}

std::vector<ScanRow> scan(std::int64_t p, int jobs)
{
    const auto g = std::make_shared<const Superalgebra>(build_p_tilde_2(p));
    const auto n = static_cast<std::int64_t>(p * p);
    std::vector<ScanRow> rows(static_cast<std::size_t>(n));
    std::exception_ptr failure;
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    const int threads = 1;
    (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t t = 0; t < n; ++t) {
        try {
            rows[static_cast<std::size_t>(t)] =
                scan_instance(g, {static_cast<Residue>(t / p), static_cast<Residue>(t % p)});
        } catch (...) {
#pragma omp critical(kaccoh_scan_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::vector<ScanRow> scan_serial(std::int64_t p)
{
    const auto g = std::make_shared<const Superalgebra>(build_p_tilde_2(p));
    std::vector<ScanRow> rows;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            rows.push_back(scan_instance(g, {static_cast<Residue>(a), static_cast<Residue>(b)}));
    return rows;
}

ScanSummary summarize(std::int64_t p, const std::vector<ScanRow>& rows)
{
    const PrimeField f(p);
    ScanSummary s;
    s.rows = rows.size();
    for (const auto& r : rows) {
        ++s.h1_counts[r.h1];
        if (!r.agrees)
            s.disagreements.push_back(r);
        if (matching_predictor_clauses(f, {r.a, r.b}).size() > 1)
            ++s.clause_overlaps;
    }
    return s;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows)
{
    std::string out = kScanCsvHeader;
    out += '\n';
    for (const auto& r : rows)
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.a, r.b, r.phi_b_minus_a, r.dim_K, r.der_even,
                           r.der_odd, r.ider, r.h1, r.predicted, r.agrees ? "true" : "false");
    return out;
}

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"a", r.a},
                       {"b", r.b},
                       {"phi_b_minus_a", r.phi_b_minus_a},
                       {"dim_K", r.dim_K},
                       {"der_even", r.der_even},
                       {"der_odd", r.der_odd},
                       {"ider", r.ider},
                       {"h1", r.h1},
                       {"predicted", r.predicted},
                       {"agrees", r.agrees}});
    return out;
}

std::vector<ScanRow> scan_from_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kScanCsvHeader)
        throw std::invalid_argument("scan CSV: missing or wrong header");
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');)
            cells.push_back(cell);
        if (cells.size() != 10 || (cells[9] != "true" && cells[9] != "false"))
            throw std::invalid_argument("scan CSV: malformed row '" + line + "'");
        ScanRow r;
        r.a = static_cast<std::uint32_t>(std::stoul(cells[0]));
        r.b = static_cast<std::uint32_t>(std::stoul(cells[1]));
        r.phi_b_minus_a = static_cast<std::uint32_t>(std::stoul(cells[2]));
        r.dim_K = std::stoul(cells[3]);
        r.der_even = std::stoul(cells[4]);
        r.der_odd = std::stoul(cells[5]);
        r.ider = std::stoul(cells[6]);
        r.h1 = std::stoul(cells[7]);
        r.predicted = static_cast<unsigned>(std::stoul(cells[8]));
        r.agrees = cells[9] == "true";
        rows.push_back(r);
    }
    return rows;
}

std::vector<ScanRow> scan_from_json(const nlohmann::json& doc)
{
    if (!doc.is_array())
        throw std::invalid_argument("scan JSON: expected an array of rows");
    std::vector<ScanRow> rows;
    for (const auto& j : doc) {
        ScanRow r;
        r.a = j.at("a").get<std::uint32_t>();
        r.b = j.at("b").get<std::uint32_t>();
        r.phi_b_minus_a = j.at("phi_b_minus_a").get<std::uint32_t>();
        r.dim_K = j.at("dim_K").get<std::size_t>();
        r.der_even = j.at("der_even").get<std::size_t>();
        r.der_odd = j.at("der_odd").get<std::size_t>();
        r.ider = j.at("ider").get<std::size_t>();
        r.h1 = j.at("h1").get<std::size_t>();
        r.predicted = j.at("predicted").get<unsigned>();
        r.agrees = j.at("agrees").get<bool>();
        rows.push_back(r);
    }
    return rows;
}

std::string summary_line(const ScanSummary& s)
{
    std::string counts;
    for (const auto& [h, c] : s.h1_counts)
        counts += fmt::format(" h1={}:{}", h, c);
    return fmt::format("rows={}{} disagreements={} clause_overlaps={}", s.rows, counts, s.disagreements.size(),
                       s.clause_overlaps);
}

} // namespace kaccoh
