#include "tsbench/strategies.hpp"

#include <cmath>

#include "tsbench/error.hpp"

namespace tsbench {

namespace {

void check_forecast(const std::vector<double>& values, int expected, const std::string& who) {
    if (static_cast<int>(values.size()) != expected) {
        throw Error(ErrorCode::invalid_forecast,
                    "method '" + who + "' returned " + std::to_string(values.size()) +
                        " values, expected " + std::to_string(expected));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::invalid_forecast,
                        "method '" + who + "' returned a non-finite value");
        }
    }
}

[[noreturn]] void annotate_step(const Error& error, int step) {
    throw Error(error.code(), "step " + std::to_string(step) + ": " + error.what());
}

} // namespace

std::string_view to_string(Strategy strategy) {
    return strategy == Strategy::recursive ? "recursive" : "dirrec";
}

Strategy strategy_from_string(std::string_view text) {
    if (text == "recursive" || text == "Recursive") {
        return Strategy::recursive;
    }
    if (text == "dirrec" || text == "DirRec") {
        return Strategy::dirrec;
    }
    throw Error(ErrorCode::invalid_config, "unknown strategy '" + std::string(text) + "'");
}

std::vector<double> one_shot_forecast(const ForecasterSpec& spec, const TimeSeries& train,
                                      int nval) {
    if (nval < 1) {
        throw Error(ErrorCode::invalid_config, "nval must be >= 1");
    }
    auto model = spec.fit(train);
    auto out = model->forecast(nval);
    check_forecast(out, nval, spec.display_name);
    return out;
}

std::vector<double> forecast_with_strategy(const ForecasterSpec& spec, const TimeSeries& train,
                                           int nval, Strategy strategy) {
    if (nval < 1) {
        throw Error(ErrorCode::invalid_config, "nval must be >= 1");
    }
    if (spec.one_shot) {
        // black-box methods are internally recursive; only DirRec is ruled out
        if (strategy == Strategy::dirrec) {
            throw Error(ErrorCode::unsupported_strategy,
                        "method '" + spec.display_name + "' cannot be refitted under DirRec");
        }
        return one_shot_forecast(spec, train, nval);
    }
    if (strategy == Strategy::dirrec && !spec.supports_refit) {
        throw Error(ErrorCode::unsupported_strategy,
                    "method '" + spec.display_name + "' does not support DirRec refitting");
    }

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(nval));

    if (strategy == Strategy::recursive) {
        std::unique_ptr<FittedModel> model;
        try {
            model = spec.fit(train);
        } catch (const Error& error) {
            annotate_step(error, 1);
        }
        for (int step = 1; step <= nval; ++step) {
            try {
                const double next = model->forecast(1).front();
                check_forecast({next}, 1, spec.display_name);
                out.push_back(next);
                if (step < nval) {
                    model = model->extend(next);
                }
            } catch (const Error& error) {
                annotate_step(error, step);
            }
        }
    } else {
        TimeSeries series = train;
        for (int step = 1; step <= nval; ++step) {
            try {
                auto model = spec.fit(series);
                const double next = model->forecast(1).front();
                check_forecast({next}, 1, spec.display_name);
                out.push_back(next);
                series.values.push_back(next);
            } catch (const Error& error) {
                annotate_step(error, step);
            }
        }
    }
    return out;
}

} // namespace tsbench
