#include "tsbench/forecasters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "tsbench/error.hpp"

namespace tsbench {

namespace {

void check_not_empty(const TimeSeries& train) {
    if (train.values.empty()) {
        throw Error(ErrorCode::empty_input, "training series is empty");
    }
}

void check_horizon(int horizon) {
    if (horizon < 1) {
        throw Error(ErrorCode::invalid_forecast, "forecast horizon must be >= 1");
    }
}

class SeasonalNaiveModel final : public FittedModel {
public:
    SeasonalNaiveModel(std::vector<double> history, int cycle)
        : history_(std::move(history)), cycle_(cycle) {}

    std::string_view method_name() const override { return "seasonal-naive"; }

    std::vector<double> forecast(int horizon) const override {
        check_horizon(horizon);
        std::vector<double> out(static_cast<std::size_t>(horizon));
        const std::size_t len = history_.size();
        for (int i = 0; i < horizon; ++i) {
            out[i] = history_[len - cycle_ + (i % cycle_)];
        }
        return out;
    }

    std::unique_ptr<FittedModel> extend(double observation) const override {
        auto extended = history_;
        extended.push_back(observation);
        return std::make_unique<SeasonalNaiveModel>(std::move(extended), cycle_);
    }

private:
    std::vector<double> history_;
    int cycle_;
};

class MeanModel final : public FittedModel {
public:
    explicit MeanModel(double mean) : mean_(mean) {}

    std::string_view method_name() const override { return "mean"; }

    std::vector<double> forecast(int horizon) const override {
        check_horizon(horizon);
        return std::vector<double>(static_cast<std::size_t>(horizon), mean_);
    }

    std::unique_ptr<FittedModel> extend(double) const override {
        // the mean is the fitted parameter; new observations do not move it
        return std::make_unique<MeanModel>(mean_);
    }

private:
    double mean_;
};

class DriftModel final : public FittedModel {
public:
    DriftModel(double last, double slope) : last_(last), slope_(slope) {}

    std::string_view method_name() const override { return "drift"; }

    std::vector<double> forecast(int horizon) const override {
        check_horizon(horizon);
        std::vector<double> out(static_cast<std::size_t>(horizon));
        for (int i = 0; i < horizon; ++i) {
            out[i] = last_ + (i + 1) * slope_;
        }
        return out;
    }

    std::unique_ptr<FittedModel> extend(double observation) const override {
        // slope frozen; forecasts anchor to the new end of the history
        return std::make_unique<DriftModel>(observation, slope_);
    }

private:
    double last_;
    double slope_;
};

class BlackBoxModel final : public FittedModel {
public:
    BlackBoxModel(std::string name, TimeSeries train,
                  std::shared_ptr<const std::function<std::vector<double>(const TimeSeries&, int)>> fn)
        : name_(std::move(name)), train_(std::move(train)), fn_(std::move(fn)) {}

    std::string_view method_name() const override { return name_; }

    std::vector<double> forecast(int horizon) const override {
        check_horizon(horizon);
        return (*fn_)(train_, horizon);
    }

    std::unique_ptr<FittedModel> extend(double) const override {
        throw Error(ErrorCode::unsupported_strategy,
                    "method '" + name_ + "' forecasts in one shot and cannot be extended");
    }

private:
    std::string name_;
    TimeSeries train_;
    std::shared_ptr<const std::function<std::vector<double>(const TimeSeries&, int)>> fn_;
};

} // namespace

void ForecasterRegistry::add(ForecasterSpec spec) {
    if (contains(spec.name)) {
        throw Error(ErrorCode::duplicate_name,
                    "method '" + spec.name + "' is already registered");
    }
    specs_.push_back(std::move(spec));
}

bool ForecasterRegistry::contains(std::string_view name) const {
    return std::any_of(specs_.begin(), specs_.end(),
                       [&](const ForecasterSpec& s) { return s.name == name; });
}

const ForecasterSpec& ForecasterRegistry::get(std::string_view name) const {
    for (const auto& spec : specs_) {
        if (spec.name == name) {
            return spec;
        }
    }
    throw Error(ErrorCode::unknown_method, "unknown method '" + std::string(name) + "'");
}

std::vector<std::string> ForecasterRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& spec : specs_) {
        out.push_back(spec.name);
    }
    return out;
}

ForecasterRegistry register_forecaster(ForecasterRegistry registry, ForecasterSpec spec) {
    registry.add(std::move(spec));
    return registry;
}

ForecasterSpec seasonal_naive_forecaster() {
    ForecasterSpec spec;
    spec.name = "seasonal-naive";
    spec.display_name = "seasonal-naive";
    spec.fit = [](const TimeSeries& train) -> std::unique_ptr<FittedModel> {
        check_not_empty(train);
        if (train.length() < train.cycle) {
            throw Error(ErrorCode::series_too_short,
                        "seasonal-naive needs at least one full cycle (" +
                            std::to_string(train.cycle) + " values), got " +
                            std::to_string(train.length()));
        }
        return std::make_unique<SeasonalNaiveModel>(train.values, train.cycle);
    };
    return spec;
}

ForecasterSpec mean_forecaster() {
    ForecasterSpec spec;
    spec.name = "mean";
    spec.display_name = "mean";
    spec.fit = [](const TimeSeries& train) -> std::unique_ptr<FittedModel> {
        check_not_empty(train);
        const double mean = std::accumulate(train.values.begin(), train.values.end(), 0.0) /
                            static_cast<double>(train.values.size());
        return std::make_unique<MeanModel>(mean);
    };
    return spec;
}

ForecasterSpec drift_forecaster() {
    ForecasterSpec spec;
    spec.name = "drift";
    spec.display_name = "drift";
    spec.fit = [](const TimeSeries& train) -> std::unique_ptr<FittedModel> {
        if (train.length() < 2) {
            throw Error(ErrorCode::series_too_short, "drift needs at least two values");
        }
        const double first = train.values.front();
        const double last = train.values.back();
        const double slope = (last - first) / static_cast<double>(train.length() - 1);
        return std::make_unique<DriftModel>(last, slope);
    };
    return spec;
}

ForecasterSpec make_black_box(std::string name,
                              std::function<std::vector<double>(const TimeSeries&, int)> fn) {
    ForecasterSpec spec;
    spec.name = name;
    spec.display_name = std::move(name);
    spec.supports_refit = false;
    spec.one_shot = true;
    auto shared = std::make_shared<const std::function<std::vector<double>(const TimeSeries&, int)>>(
        std::move(fn));
    spec.fit = [display = spec.display_name, shared](const TimeSeries& train)
        -> std::unique_ptr<FittedModel> {
        return std::make_unique<BlackBoxModel>(display, train, shared);
    };
    return spec;
}

ForecasterSpec builtin_forecaster(std::string_view name) {
    if (name == "seasonal-naive") return seasonal_naive_forecaster();
    if (name == "mean") return mean_forecaster();
    if (name == "drift") return drift_forecaster();
    if (name == "ar-lite") return ar_lite_forecaster();
    if (name == "ets-lite") return ets_lite_forecaster();
    if (name == "psf") return psf_forecaster();
    throw Error(ErrorCode::unknown_method, "unknown method '" + std::string(name) + "'");
}

std::vector<std::string> builtin_forecaster_names() {
    return {"seasonal-naive", "mean", "drift", "ar-lite", "ets-lite", "psf"};
}

std::vector<ForecasterSpec> default_methods() {
    std::vector<ForecasterSpec> methods;
    methods.push_back(ar_lite_forecaster());
    methods.push_back(psf_forecaster());
    return methods;
}

std::pair<std::vector<double>, MinMaxScale> minmax_normalize(std::span<const double> values) {
    MinMaxScale scale;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    scale.min = values.empty() ? 0.0 : *lo;
    scale.max = values.empty() ? 0.0 : *hi;
    std::vector<double> out(values.size());
    if (scale.max == scale.min) {
        std::fill(out.begin(), out.end(), 0.5);
        return {std::move(out), scale};
    }
    const double range = scale.max - scale.min;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = (values[i] - scale.min) / range;
    }
    return {std::move(out), scale};
}

std::vector<double> minmax_denormalize(std::span<const double> normalized, MinMaxScale scale) {
    std::vector<double> out(normalized.size());
    const double range = scale.max - scale.min;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        out[i] = normalized[i] * range + scale.min;
    }
    return out;
}

} // namespace tsbench
