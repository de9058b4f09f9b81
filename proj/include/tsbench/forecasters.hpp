#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsbench/timeseries.hpp"

namespace tsbench {

/// A model after fitting. `forecast` is pure and deterministic; `extend`
/// appends one observation to the conditioning history without touching
/// fitted parameters, which is what separates the Recursive strategy from
/// DirRec refitting.
class FittedModel {
public:
    virtual ~FittedModel() = default;

    virtual std::string_view method_name() const = 0;
    virtual std::vector<double> forecast(int horizon) const = 0;
    virtual std::unique_ptr<FittedModel> extend(double observation) const = 0;
};

using FitFn = std::function<std::unique_ptr<FittedModel>(const TimeSeries&)>;

/// Registry entry binding a method name to a fit procedure.
/// `one_shot` marks black-box methods that forecast the whole horizon in one
/// call and bypass the strategy driver.
struct ForecasterSpec {
    std::string name;
    std::string display_name;
    FitFn fit;
    bool supports_refit = true;
    bool one_shot = false;
};

/// Ordered forecaster collection; insertion order defines report row order.
class ForecasterRegistry {
public:
    void add(ForecasterSpec spec); // throws duplicate_name
    bool contains(std::string_view name) const;
    const ForecasterSpec& get(std::string_view name) const; // throws unknown_method

    const std::vector<ForecasterSpec>& specs() const { return specs_; }
    std::vector<std::string> names() const;

private:
    std::vector<ForecasterSpec> specs_;
};

/// Returns a copy of `registry` with `spec` appended.
ForecasterRegistry register_forecaster(ForecasterRegistry registry, ForecasterSpec spec);

// ---------------------------------------------------------------------------
// Built-in methods
// ---------------------------------------------------------------------------

/// Repeats the last full cycle of the training series.
ForecasterSpec seasonal_naive_forecaster();

/// Forecasts the training mean at every horizon.
ForecasterSpec mean_forecaster();

/// Continues the straight line through the first and last observations.
ForecasterSpec drift_forecaster();

/// Least-squares AR(p) with AIC order selection on an optionally
/// once-differenced series.
ForecasterSpec ar_lite_forecaster();

/// Additive Holt-Winters with smoothing weights chosen by grid search on
/// one-step-ahead SSE.
ForecasterSpec ets_lite_forecaster();

inline constexpr std::uint64_t kPsfDefaultSeed = 42;

/// Pattern-sequence forecaster: k-means over whole cycles, label-suffix
/// matching, element-wise mean of the cycles that followed past matches.
/// The k-means seed is fixed at registration so runs are reproducible.
ForecasterSpec psf_forecaster(std::uint64_t kmeans_seed = kPsfDefaultSeed);

/// Wraps a (train, horizon) -> values function as a one-shot method.
ForecasterSpec make_black_box(std::string name,
                              std::function<std::vector<double>(const TimeSeries&, int)> fn);

/// Lookup of the six built-in method names: seasonal-naive, mean, drift,
/// ar-lite, ets-lite, psf.
ForecasterSpec builtin_forecaster(std::string_view name);
std::vector<std::string> builtin_forecaster_names();

/// Default method set: ar-lite, psf.
std::vector<ForecasterSpec> default_methods();

// ---------------------------------------------------------------------------
// Diagnostics and helpers
// ---------------------------------------------------------------------------

/// AR model with inspectable fitted state.
class ArLiteModel final : public FittedModel {
public:
    static std::unique_ptr<ArLiteModel> fit(const TimeSeries& train);

    std::string_view method_name() const override { return "ar-lite"; }
    std::vector<double> forecast(int horizon) const override;
    std::unique_ptr<FittedModel> extend(double observation) const override;

    int differencing() const { return d_; }
    double intercept() const { return intercept_; }
    std::span<const double> coefficients() const { return coefficients_; }
    int order() const { return static_cast<int>(coefficients_.size()); }

private:
    std::vector<double> history_;
    int d_ = 0;
    double intercept_ = 0.0;
    std::vector<double> coefficients_;
};

struct MinMaxScale {
    double min = 0.0;
    double max = 0.0;
};

/// Maps values onto [0,1]; a constant series maps to 0.5 everywhere.
std::pair<std::vector<double>, MinMaxScale> minmax_normalize(std::span<const double> values);
std::vector<double> minmax_denormalize(std::span<const double> normalized, MinMaxScale scale);

} // namespace tsbench
