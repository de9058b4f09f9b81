#include "tsbench/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "tsbench/error.hpp"

namespace tsbench {

namespace {

void check_pair(std::span<const double> obs, std::span<const double> pred) {
    if (obs.empty()) {
        throw Error(ErrorCode::empty_input, "metric input is empty");
    }
    if (obs.size() != pred.size()) {
        throw Error(ErrorCode::length_mismatch,
                    "observed length " + std::to_string(obs.size()) +
                        " != predicted length " + std::to_string(pred.size()));
    }
}

double sample_variance(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    double sum_sq = 0.0;
    for (double v : values) {
        sum_sq += (v - mean) * (v - mean);
    }
    return sum_sq / (n - 1.0);
}

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

double rmse(std::span<const double> obs, std::span<const double> pred) {
    check_pair(obs, pred);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double diff = obs[i] - pred[i];
        sum_sq += diff * diff;
    }
    return std::sqrt(sum_sq / static_cast<double>(obs.size()));
}

double mae(std::span<const double> obs, std::span<const double> pred) {
    check_pair(obs, pred);
    double sum_abs = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        sum_abs += std::abs(obs[i] - pred[i]);
    }
    return sum_abs / static_cast<double>(obs.size());
}

double mape(std::span<const double> obs, std::span<const double> pred) {
    check_pair(obs, pred);
    double sum_pct = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (obs[i] == 0.0) {
            throw Error(ErrorCode::zero_observation,
                        "observation " + std::to_string(i + 1) +
                            " is zero; MAPE is undefined for this series");
        }
        sum_pct += std::abs(obs[i] - pred[i]) / std::abs(obs[i]);
    }
    return sum_pct / static_cast<double>(obs.size()) * 100.0;
}

double pcv(std::span<const double> obs, std::span<const double> pred) {
    check_pair(obs, pred);
    if (obs.size() < 2) {
        throw Error(ErrorCode::empty_input, "PCV needs at least two values");
    }
    const double var_obs = sample_variance(obs);
    if (var_obs <= 0.0) {
        throw Error(ErrorCode::zero_variance, "observed values have zero variance");
    }
    return std::abs(var_obs - sample_variance(pred)) / var_obs * 100.0;
}

MetricRegistry MetricRegistry::defaults() {
    MetricRegistry registry;
    registry.add(builtin_metric("RMSE"));
    registry.add(builtin_metric("MAE"));
    registry.add(builtin_metric("MAPE"));
    return registry;
}

void MetricRegistry::add(MetricSpec spec) {
    if (contains(spec.name)) {
        throw Error(ErrorCode::duplicate_name,
                    "metric '" + spec.name + "' is already registered");
    }
    specs_.push_back(std::move(spec));
}

bool MetricRegistry::contains(std::string_view name) const {
    return std::any_of(specs_.begin(), specs_.end(),
                       [&](const MetricSpec& s) { return s.name == name; });
}

std::vector<std::string> MetricRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& spec : specs_) {
        out.push_back(spec.name);
    }
    return out;
}

MetricRegistry register_metric(MetricRegistry registry, MetricSpec spec) {
    registry.add(std::move(spec));
    return registry;
}

MetricSpec builtin_metric(std::string_view name) {
    const std::string key = lower(name);
    if (key == "rmse") {
        return {"RMSE", "RMSE", [](auto o, auto p) { return rmse(o, p); }};
    }
    if (key == "mae") {
        return {"MAE", "MAE", [](auto o, auto p) { return mae(o, p); }};
    }
    if (key == "mape") {
        return {"MAPE", "MAPE", [](auto o, auto p) { return mape(o, p); }};
    }
    if (key == "pcv") {
        return {"PCV", "PCV", [](auto o, auto p) { return pcv(o, p); }};
    }
    throw Error(ErrorCode::unknown_metric, "unknown metric '" + std::string(name) + "'");
}

std::vector<std::string> builtin_metric_names() {
    return {"RMSE", "MAE", "MAPE", "PCV"};
}

} // namespace tsbench
