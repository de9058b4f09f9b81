#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "tsbench/error.hpp"
#include "tsbench/forecasters.hpp"

namespace tsbench {

namespace {

// Differencing is only worth it when it cuts the variance decisively; the
// ratio of a stationary AR(1) already drops below 1 once the lag-1
// autocorrelation passes 0.5, so the cut-off sits well under that.
constexpr double kDifferenceVarianceRatio = 0.4;

double population_variance(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double sum_sq = 0.0;
    for (double v : values) {
        sum_sq += (v - mean) * (v - mean);
    }
    return sum_sq / n;
}

std::vector<double> first_difference(std::span<const double> values) {
    std::vector<double> out(values.size() - 1);
    for (std::size_t i = 1; i < values.size(); ++i) {
        out[i - 1] = values[i] - values[i - 1];
    }
    return out;
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Returns nothing when the system is singular.
std::optional<std::vector<double>> solve_linear(std::vector<std::vector<double>> a,
                                                std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-12) {
            return std::nullopt;
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t row = n; row-- > 0;) {
        double sum = b[row];
        for (std::size_t k = row + 1; k < n; ++k) {
            sum -= a[row][k] * x[k];
        }
        x[row] = sum / a[row][row];
    }
    return x;
}

struct ArFit {
    double intercept = 0.0;
    std::vector<double> coefficients;
    double aic = 0.0;
};

// Least-squares AR(p) with intercept, conditioned on rows p_max..n-1 so AIC
// values are comparable across orders.
std::optional<ArFit> fit_order(std::span<const double> w, int p, int p_max) {
    const int n = static_cast<int>(w.size());
    const int rows = n - p_max;
    const int unknowns = p + 1;

    std::vector<std::vector<double>> ata(unknowns, std::vector<double>(unknowns, 0.0));
    std::vector<double> atb(unknowns, 0.0);
    for (int t = p_max; t < n; ++t) {
        std::vector<double> x(unknowns);
        x[0] = 1.0;
        for (int j = 1; j <= p; ++j) {
            x[j] = w[t - j];
        }
        for (int i = 0; i < unknowns; ++i) {
            for (int j = 0; j < unknowns; ++j) {
                ata[i][j] += x[i] * x[j];
            }
            atb[i] += x[i] * w[t];
        }
    }

    auto solution = solve_linear(std::move(ata), std::move(atb));
    if (!solution) {
        return std::nullopt;
    }

    double sse = 0.0;
    for (int t = p_max; t < n; ++t) {
        double fitted = (*solution)[0];
        for (int j = 1; j <= p; ++j) {
            fitted += (*solution)[j] * w[t - j];
        }
        const double e = w[t] - fitted;
        sse += e * e;
    }
    sse = std::max(sse, 1e-300);

    ArFit fit;
    fit.intercept = (*solution)[0];
    fit.coefficients.assign(solution->begin() + 1, solution->end());
    fit.aic = rows * std::log(sse / rows) + 2.0 * (p + 1);
    return fit;
}

} // namespace

std::unique_ptr<ArLiteModel> ArLiteModel::fit(const TimeSeries& train) {
    const int len = train.length();
    if (len < 10) {
        throw Error(ErrorCode::series_too_short,
                    "ar-lite needs at least 10 values, got " + std::to_string(len));
    }

    auto model = std::unique_ptr<ArLiteModel>(new ArLiteModel());
    model->history_ = train.values;

    const double var_level = population_variance(train.values);
    const auto diffed = first_difference(train.values);
    const double var_diff = population_variance(diffed);
    model->d_ = (var_diff < kDifferenceVarianceRatio * var_level) ? 1 : 0;

    const std::vector<double>& w = (model->d_ == 1) ? diffed : model->history_;
    const int n = static_cast<int>(w.size());
    int p_max = std::min(10, len / 5);
    p_max = std::min(p_max, (n - 2) / 2); // keep more rows than unknowns

    std::optional<ArFit> best;
    int best_p = 0;
    for (int p = 0; p <= p_max; ++p) {
        auto candidate = fit_order(w, p, p_max);
        if (!candidate) {
            continue; // collinear lags: skip this order
        }
        if (!best || candidate->aic < best->aic) {
            best = std::move(candidate);
            best_p = p;
        }
    }
    // p = 0 is intercept-only and cannot be singular, so `best` always holds
    (void)best_p;
    model->intercept_ = best->intercept;
    model->coefficients_ = std::move(best->coefficients);
    return model;
}

std::vector<double> ArLiteModel::forecast(int horizon) const {
    if (horizon < 1) {
        throw Error(ErrorCode::invalid_forecast, "forecast horizon must be >= 1");
    }
    std::vector<double> w = (d_ == 1) ? first_difference(history_) : history_;
    const int p = order();

    std::vector<double> working_forecast(static_cast<std::size_t>(horizon));
    for (int i = 0; i < horizon; ++i) {
        double next = intercept_;
        for (int j = 1; j <= p; ++j) {
            next += coefficients_[j - 1] * w[w.size() - j];
        }
        working_forecast[i] = next;
        w.push_back(next);
    }

    if (d_ == 0) {
        return working_forecast;
    }
    std::vector<double> out(static_cast<std::size_t>(horizon));
    double level = history_.back();
    for (int i = 0; i < horizon; ++i) {
        level += working_forecast[i];
        out[i] = level;
    }
    return out;
}

std::unique_ptr<FittedModel> ArLiteModel::extend(double observation) const {
    auto model = std::unique_ptr<ArLiteModel>(new ArLiteModel());
    model->history_ = history_;
    model->history_.push_back(observation);
    model->d_ = d_;
    model->intercept_ = intercept_;
    model->coefficients_ = coefficients_;
    return model;
}

ForecasterSpec ar_lite_forecaster() {
    ForecasterSpec spec;
    spec.name = "ar-lite";
    spec.display_name = "ar-lite";
    spec.fit = [](const TimeSeries& train) -> std::unique_ptr<FittedModel> {
        return ArLiteModel::fit(train);
    };
    return spec;
}

} // namespace tsbench
