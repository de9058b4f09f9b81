#include "tsbench/testbench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <unordered_set>

#include "tsbench/error.hpp"

namespace tsbench {

namespace {

void check_unique_names(const std::vector<ForecasterSpec>& methods) {
    std::unordered_set<std::string> seen;
    for (const auto& method : methods) {
        if (!seen.insert(method.display_name).second) {
            throw Error(ErrorCode::duplicate_method,
                        "method '" + method.display_name + "' appears more than once");
        }
    }
}

// Runs `task(i)` for i in [0, count), spread over at most `jobs` threads.
// Worker exceptions are rethrown in index order once all workers finish.
void run_indexed(int count, int jobs, const std::function<void(int)>& task) {
    const int workers = std::max(1, std::min(jobs, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    task(i);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& thread : pool) {
        thread.join();
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
}

MethodRow evaluate_method(const ForecasterSpec& method, const TimeSeries& train,
                          const TimeSeries& test, const EvaluationConfig& config) {
    MethodRow row;
    row.name = method.display_name;

    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    std::vector<double> forecast;
    try {
        forecast = forecast_with_strategy(method, train, config.nval, config.strategy);
    } catch (const Error& error) {
        row.exec_time = std::chrono::duration<double>(clock::now() - started).count();
        row.error = error.what();
        return row;
    }
    row.exec_time = std::max(std::chrono::duration<double>(clock::now() - started).count(), 1e-9);

    row.forecast = std::move(forecast);
    row.metric_values.reserve(config.metrics.specs().size());
    for (const auto& metric : config.metrics.specs()) {
        row.metric_values.push_back(metric.fn(test.values, row.forecast));
    }
    return row;
}

} // namespace

const MethodRow* EvaluationResult::find_row(std::string_view name) const {
    for (const auto& row : rows) {
        if (row.name == name) {
            return &row;
        }
    }
    return nullptr;
}

EvaluationResult evaluate(const EvaluationConfig& config) {
    if (config.methods.empty()) {
        throw Error(ErrorCode::invalid_config, "no methods configured");
    }
    if (config.jobs < 1) {
        throw Error(ErrorCode::invalid_config, "jobs must be >= 1");
    }
    check_unique_names(config.methods);

    const auto [train, test] =
        holdout_split(config.series, SplitSpec{config.resolved_dval(), config.nval});

    EvaluationResult result;
    result.metric_names = config.metrics.names();
    result.test_values = test.values;
    result.config = config;
    result.rows.resize(config.methods.size());

    const int count = static_cast<int>(config.methods.size());
    run_indexed(count, config.jobs, [&](int i) {
        result.rows[static_cast<std::size_t>(i)] =
            evaluate_method(config.methods[static_cast<std::size_t>(i)], train, test, config);
    });
    return result;
}

EvaluationResult append_methods(const EvaluationResult& result,
                                const std::vector<ForecasterSpec>& new_methods) {
    if (new_methods.empty()) {
        return result;
    }
    check_unique_names(new_methods);
    for (const auto& method : new_methods) {
        if (result.find_row(method.display_name) != nullptr) {
            throw Error(ErrorCode::duplicate_method,
                        "method '" + method.display_name + "' is already evaluated");
        }
    }

    EvaluationConfig addition = result.config;
    addition.methods = new_methods;
    EvaluationResult fresh = evaluate(addition);

    EvaluationResult merged = result;
    merged.rows.insert(merged.rows.end(), fresh.rows.begin(), fresh.rows.end());
    merged.config.methods.insert(merged.config.methods.end(), new_methods.begin(),
                                 new_methods.end());
    return merged;
}

EvaluationResult select_methods(const EvaluationResult& result,
                                const std::vector<std::string>& keep) {
    for (const auto& name : keep) {
        if (result.find_row(name) == nullptr) {
            throw Error(ErrorCode::unknown_method,
                        "method '" + name + "' is not part of this result");
        }
    }
    const auto kept = [&](const std::string& name) {
        return std::find(keep.begin(), keep.end(), name) != keep.end();
    };

    EvaluationResult filtered = result;
    std::erase_if(filtered.rows, [&](const MethodRow& row) { return !kept(row.name); });
    std::erase_if(filtered.config.methods,
                  [&](const ForecasterSpec& spec) { return !kept(spec.display_name); });
    return filtered;
}

MonteCarloResult monte_carlo(const EvaluationConfig& config, int size, int iterations,
                             bool report_forecasts, bool report_each) {
    if (iterations < 1) {
        throw Error(ErrorCode::invalid_config, "iterations must be >= 1");
    }
    if (config.metrics.empty()) {
        throw Error(ErrorCode::invalid_config, "Monte-Carlo needs at least one metric");
    }
    if (size > config.series.length()) {
        throw Error(ErrorCode::patch_too_large,
                    "patch size " + std::to_string(size) + " exceeds series length " +
                        std::to_string(config.series.length()));
    }
    if (size - config.nval < 1) {
        throw Error(ErrorCode::invalid_split,
                    "patch size " + std::to_string(size) + " leaves no training data for nval=" +
                        std::to_string(config.nval));
    }

    // all start indices come from one serial draw, so iteration execution
    // order cannot change the outcome
    std::mt19937_64 rng(config.seed);
    std::vector<Patch> patches;
    patches.reserve(static_cast<std::size_t>(iterations));
    for (int i = 0; i < iterations; ++i) {
        patches.push_back(random_patch(config.series, size, rng));
    }

    MonteCarloResult mc;
    mc.metric_name = config.metrics.specs().front().name;
    for (const auto& method : config.methods) {
        mc.method_names.push_back(method.display_name);
    }
    mc.config = config;
    mc.patch_size = size;
    mc.report_forecasts = report_forecasts;
    mc.report_each = report_each;
    mc.rows.resize(static_cast<std::size_t>(iterations));
    const bool keep_results = report_forecasts || report_each;
    if (keep_results) {
        mc.iteration_results.resize(static_cast<std::size_t>(iterations));
    }

    std::vector<EvaluationResult> scratch(keep_results ? 0 : static_cast<std::size_t>(iterations));
    run_indexed(iterations, config.jobs, [&](int i) {
        EvaluationConfig patch_config = config;
        patch_config.series.values = patches[static_cast<std::size_t>(i)].values;
        patch_config.series.origin_label.clear();
        patch_config.dval = size;
        patch_config.jobs = 1;
        EvaluationResult& slot =
            keep_results ? mc.iteration_results[static_cast<std::size_t>(i)]
                         : scratch[static_cast<std::size_t>(i)];
        slot = evaluate(patch_config);

        MonteCarloRow row;
        row.start_index = patches[static_cast<std::size_t>(i)].start_index;
        for (const auto& method_row : slot.rows) {
            row.values.push_back(method_row.failed()
                                     ? std::nullopt
                                     : std::optional<double>(method_row.metric_values.front()));
        }
        mc.rows[static_cast<std::size_t>(i)] = std::move(row);
    });

    mc.mean_row.resize(mc.method_names.size());
    for (std::size_t m = 0; m < mc.method_names.size(); ++m) {
        double sum = 0.0;
        int present = 0;
        for (const auto& row : mc.rows) {
            if (row.values[m].has_value()) {
                sum += *row.values[m];
                ++present;
            }
        }
        mc.mean_row[m] = present > 0 ? std::optional<double>(sum / present) : std::nullopt;
    }
    return mc;
}

} // namespace tsbench
