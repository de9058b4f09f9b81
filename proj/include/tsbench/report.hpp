#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsbench/testbench.hpp"

namespace tsbench {

/// Aligned text table: metric columns plus exec_time, values rounded to
/// 4 decimals, errored methods rendered with their reason.
std::string render_table(const EvaluationResult& result);

/// Per-iteration rows keyed by patch start index, plus the Mean row.
std::string render_table(const MonteCarloResult& result);

/// Full-precision JSON document (schema_version "1"). Round-trips losslessly.
nlohmann::ordered_json to_json(const EvaluationResult& result);
nlohmann::ordered_json to_json(const MonteCarloResult& result);

/// Grouped bars per metric and exec_time plus a line panel overlaying test
/// values and every method's forecasts. Byte-deterministic for a result.
std::string render_comparison_chart(const EvaluationResult& result);

/// Forecast steps arranged on a circle, radius proportional to value. When
/// every value is equal the chart degenerates to a single annotated circle.
std::string render_polar_chart(const EvaluationResult& result);

/// Per-iteration metric traces with the per-method mean.
std::string render_monte_carlo_chart(const MonteCarloResult& result);

/// Zeroes exec_time everywhere, for timing-independent golden outputs.
EvaluationResult strip_timing(EvaluationResult result);
MonteCarloResult strip_timing(MonteCarloResult result);

struct ReportBundle {
    std::string table_text;
    nlohmann::ordered_json result_json;
    std::vector<std::pair<std::string, std::string>> charts; // filename -> SVG
};

ReportBundle make_report_bundle(const EvaluationResult& result);
ReportBundle make_report_bundle(const MonteCarloResult& result);

/// Writes table.txt, result.json, and every chart into `out_dir`.
void write_report_bundle(const ReportBundle& bundle, const std::filesystem::path& out_dir);

} // namespace tsbench
