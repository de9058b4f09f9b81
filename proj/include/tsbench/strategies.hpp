#pragma once

#include <string_view>
#include <vector>

#include "tsbench/forecasters.hpp"
#include "tsbench/timeseries.hpp"

namespace tsbench {

/// Multi-step drivers. Recursive fits once and feeds each one-step forecast
/// back through extend(); DirRec refits from scratch after every appended
/// prediction.
enum class Strategy {
    recursive,
    dirrec,
};

std::string_view to_string(Strategy strategy);
Strategy strategy_from_string(std::string_view text); // "recursive" | "dirrec"

/// Produces exactly `nval` forecasts using the given strategy. One-shot
/// (black-box) methods run under Recursive only; errors raised mid-loop are
/// annotated with the step index.
std::vector<double> forecast_with_strategy(const ForecasterSpec& spec, const TimeSeries& train,
                                           int nval, Strategy strategy);

/// Fits once and forecasts the whole horizon in a single call.
std::vector<double> one_shot_forecast(const ForecasterSpec& spec, const TimeSeries& train,
                                      int nval);

} // namespace tsbench
