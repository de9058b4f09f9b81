#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsbench/forecasters.hpp"
#include "tsbench/metrics.hpp"
#include "tsbench/strategies.hpp"
#include "tsbench/timeseries.hpp"

namespace tsbench {

/// Everything one evaluation run takes. `dval` defaults to the full series
/// length; `seed` drives Monte-Carlo patch draws; `jobs` caps worker threads
/// (results are identical regardless).
struct EvaluationConfig {
    TimeSeries series;
    int nval = 12;
    std::optional<int> dval;
    MetricRegistry metrics = MetricRegistry::defaults();
    std::vector<ForecasterSpec> methods = default_methods();
    Strategy strategy = Strategy::recursive;
    std::uint64_t seed = 0;
    int jobs = 1;

    int resolved_dval() const { return dval.value_or(series.length()); }
};

/// One method's outcome: metric values in registry order plus wall-clock
/// fit+forecast seconds, or an error annotation when the method failed.
struct MethodRow {
    std::string name;
    std::vector<double> metric_values;
    double exec_time = 0.0;
    std::vector<double> forecast;
    std::string error;

    bool failed() const { return !error.empty(); }
};

struct EvaluationResult {
    std::vector<std::string> metric_names;
    std::vector<double> test_values;
    std::vector<MethodRow> rows;
    EvaluationConfig config; // echoed input

    const MethodRow* find_row(std::string_view name) const;
};

/// Runs every configured method on the hold-out split and scores it under
/// every configured metric. Method failures become annotated rows; the run
/// continues. Configuration errors throw.
EvaluationResult evaluate(const EvaluationConfig& config);

/// Evaluates only `new_methods` and appends their rows; existing rows are
/// carried over without re-running their methods.
EvaluationResult append_methods(const EvaluationResult& result,
                                const std::vector<ForecasterSpec>& new_methods);

/// Keeps only the named rows, preserving their original relative order.
/// Nothing is recomputed.
EvaluationResult select_methods(const EvaluationResult& result,
                                const std::vector<std::string>& keep);

/// One Monte-Carlo iteration: the patch start index and the first configured
/// metric's value per method (missing when the method failed on this patch).
struct MonteCarloRow {
    int start_index = 1;
    std::vector<std::optional<double>> values;
};

struct MonteCarloResult {
    std::string metric_name;
    std::vector<std::string> method_names;
    std::vector<MonteCarloRow> rows;
    std::vector<std::optional<double>> mean_row;
    std::vector<EvaluationResult> iteration_results; // kept when requested
    EvaluationConfig config;
    int patch_size = 0;
    bool report_forecasts = false;
    bool report_each = false;
};

/// Draws `iterations` random patches of `size` values (seeded by
/// config.seed), evaluates each patch with dval = size, and reports the
/// first configured metric per method plus the column means.
MonteCarloResult monte_carlo(const EvaluationConfig& config, int size, int iterations,
                             bool report_forecasts = false, bool report_each = false);

} // namespace tsbench
