#include <cmath>
#include <memory>
#include <numeric>
#include <vector>

#include "tsbench/error.hpp"
#include "tsbench/forecasters.hpp"

namespace tsbench {

namespace {

struct Smoothing {
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 0.5;
};

struct HwState {
    double level = 0.0;
    double trend = 0.0;
    std::vector<double> seasonal;
    long steps = 0; // observations consumed, for seasonal slot rotation
};

HwState initial_state(std::span<const double> y, int m) {
    HwState state;
    const double mean1 = std::accumulate(y.begin(), y.begin() + m, 0.0) / m;
    const double mean2 = std::accumulate(y.begin() + m, y.begin() + 2 * m, 0.0) / m;
    state.level = mean1;
    state.trend = (mean2 - mean1) / m;
    state.seasonal.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        state.seasonal[i] = y[i] - mean1;
    }
    return state;
}

void update(HwState& state, double y, const Smoothing& s, int m) {
    const auto slot = static_cast<std::size_t>(state.steps % m);
    const double seasonal_old = state.seasonal[slot];
    const double level_old = state.level;
    state.level = s.alpha * (y - seasonal_old) + (1.0 - s.alpha) * (level_old + state.trend);
    state.trend = s.beta * (state.level - level_old) + (1.0 - s.beta) * state.trend;
    state.seasonal[slot] = s.gamma * (y - state.level) + (1.0 - s.gamma) * seasonal_old;
    ++state.steps;
}

double one_step_sse(std::span<const double> y, const Smoothing& s, int m) {
    HwState state = initial_state(y, m);
    double sse = 0.0;
    for (double value : y) {
        const double pred =
            state.level + state.trend + state.seasonal[static_cast<std::size_t>(state.steps % m)];
        const double e = value - pred;
        sse += e * e;
        update(state, value, s, m);
    }
    return sse;
}

class EtsLiteModel final : public FittedModel {
public:
    EtsLiteModel(HwState state, Smoothing smoothing, int cycle)
        : state_(std::move(state)), smoothing_(smoothing), cycle_(cycle) {}

    std::string_view method_name() const override { return "ets-lite"; }

    std::vector<double> forecast(int horizon) const override {
        if (horizon < 1) {
            throw Error(ErrorCode::invalid_forecast, "forecast horizon must be >= 1");
        }
        std::vector<double> out(static_cast<std::size_t>(horizon));
        for (int i = 0; i < horizon; ++i) {
            const auto slot = static_cast<std::size_t>((state_.steps + i) % cycle_);
            out[i] = state_.level + (i + 1) * state_.trend + state_.seasonal[slot];
        }
        return out;
    }

    std::unique_ptr<FittedModel> extend(double observation) const override {
        // one smoothing step with frozen weights
        HwState next = state_;
        update(next, observation, smoothing_, cycle_);
        return std::make_unique<EtsLiteModel>(std::move(next), smoothing_, cycle_);
    }

private:
    HwState state_;
    Smoothing smoothing_;
    int cycle_;
};

} // namespace

ForecasterSpec ets_lite_forecaster() {
    ForecasterSpec spec;
    spec.name = "ets-lite";
    spec.display_name = "ets-lite";
    spec.fit = [](const TimeSeries& train) -> std::unique_ptr<FittedModel> {
        const int m = train.cycle;
        if (train.length() < 2 * m || train.length() < 2) {
            throw Error(ErrorCode::series_too_short,
                        "ets-lite needs at least two full cycles (" + std::to_string(2 * m) +
                            " values), got " + std::to_string(train.length()));
        }

        // With cycle 1 the seasonal term is identically zero; skip the gamma
        // axis of the grid.
        std::vector<double> grid;
        for (int i = 1; i <= 9; ++i) {
            grid.push_back(i / 10.0);
        }
        const std::vector<double> gamma_grid = (m == 1) ? std::vector<double>{0.0} : grid;

        Smoothing best;
        double best_sse = std::numeric_limits<double>::infinity();
        for (double alpha : grid) {
            for (double beta : grid) {
                for (double gamma : gamma_grid) {
                    const Smoothing candidate{alpha, beta, gamma};
                    const double sse = one_step_sse(train.values, candidate, m);
                    if (sse < best_sse) {
                        best_sse = sse;
                        best = candidate;
                    }
                }
            }
        }

        HwState state = initial_state(train.values, m);
        for (double value : train.values) {
            update(state, value, best, m);
        }
        return std::make_unique<EtsLiteModel>(std::move(state), best, m);
    };
    return spec;
}

} // namespace tsbench
