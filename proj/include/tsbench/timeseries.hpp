#pragma once

#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tsbench {

/// A univariate series with its seasonal cycle length. Values are finite
/// reals in domain units; `cycle` is the number of observations per season
/// (12 for monthly data). Immutable by convention once constructed.
struct TimeSeries {
    std::vector<double> values;
    int cycle = 1;
    std::string name;
    std::string origin_label; // label of the first observation, e.g. "1920-Jan"

    int length() const { return static_cast<int>(values.size()); }
};

/// Hold-out split request: use the trailing `dval` observations as the
/// working window and score the last `nval` of them.
struct SplitSpec {
    int dval = 0;
    int nval = 12;
};

/// Contiguous slice of a source series. `start_index` is 1-based.
struct Patch {
    int start_index = 1;
    std::vector<double> values;
};

/// Reads a UTF-8, comma-separated file with a header row. Every cell of
/// `value_column` must parse as a finite real; empty or NA cells are an
/// error, never imputed.
TimeSeries load_csv(const std::string& path, const std::string& value_column, int cycle);

/// Writes (period, value) rows at full round-trip precision.
void write_csv(const TimeSeries& ts, const std::string& path,
               const std::string& value_column = "value");

/// Built-in fixtures: "nottem" (240 monthly temperatures, 1920-1939) and
/// "airpassengers" (144 monthly counts, 1949-1960).
TimeSeries builtin_dataset(std::string_view name);
std::vector<std::string> builtin_dataset_names();

/// Splits the trailing `dval` values of `ts` into train (first dval-nval)
/// and test (last nval). Both keep the source cycle.
std::pair<TimeSeries, TimeSeries> holdout_split(const TimeSeries& ts, SplitSpec split);

/// Draws a patch of `size` values with a start index uniform over all legal
/// positions. The same generator state yields the same patch.
Patch random_patch(const TimeSeries& ts, int size, std::mt19937_64& rng);

} // namespace tsbench
