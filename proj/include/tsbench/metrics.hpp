#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsbench {

/// Root mean squared error: sqrt(mean((obs - pred)^2)).
double rmse(std::span<const double> obs, std::span<const double> pred);

/// Mean absolute error.
double mae(std::span<const double> obs, std::span<const double> pred);

/// Mean absolute percent error, in percent. Requires every observation
/// to be nonzero.
double mape(std::span<const double> obs, std::span<const double> pred);

/// Percent change in variance: |var(obs) - var(pred)| / var(obs) * 100,
/// using the sample variance (N-1 divisor).
double pcv(std::span<const double> obs, std::span<const double> pred);

using MetricFn = std::function<double(std::span<const double>, std::span<const double>)>;

/// Registry entry binding a name to an (obs, pred) -> scalar function.
/// `fn` must be pure.
struct MetricSpec {
    std::string name;
    std::string display_name;
    MetricFn fn;
};

/// Ordered metric collection; insertion order defines report column order.
/// exec_time is an implicit final report column, not a registry entry.
class MetricRegistry {
public:
    static MetricRegistry defaults(); // RMSE, MAE, MAPE

    void add(MetricSpec spec); // throws duplicate_name
    bool contains(std::string_view name) const;

    const std::vector<MetricSpec>& specs() const { return specs_; }
    std::vector<std::string> names() const;
    bool empty() const { return specs_.empty(); }

private:
    std::vector<MetricSpec> specs_;
};

/// Returns a copy of `registry` with `spec` appended.
MetricRegistry register_metric(MetricRegistry registry, MetricSpec spec);

/// Case-insensitive lookup of RMSE, MAE, MAPE, or PCV.
MetricSpec builtin_metric(std::string_view name);
std::vector<std::string> builtin_metric_names();

} // namespace tsbench
