#include "tsbench/timeseries.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tsbench/error.hpp"
#include "tsbench/random.hpp"

namespace tsbench {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

double parse_cell(const std::string& raw, int row) {
    const std::string cell = trim(raw);
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || cell.empty() || !std::isfinite(value)) {
        throw Error(ErrorCode::unparseable_value,
                    "row " + std::to_string(row) + ": cannot parse value '" + cell + "'");
    }
    return value;
}

} // namespace

TimeSeries load_csv(const std::string& path, const std::string& value_column, int cycle) {
    if (cycle < 1) {
        throw Error(ErrorCode::invalid_config, "cycle must be >= 1");
    }
    std::ifstream file(path);
    if (!file) {
        throw Error(ErrorCode::file_not_found, "cannot open '" + path + "'");
    }

    std::string line;
    if (!std::getline(file, line)) {
        throw Error(ErrorCode::missing_column, "'" + path + "' has no header row");
    }
    const auto header = split_line(line);
    std::size_t column = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (trim(header[i]) == value_column) {
            column = i;
            break;
        }
    }
    if (column == header.size()) {
        throw Error(ErrorCode::missing_column,
                    "column '" + value_column + "' not found in '" + path + "'");
    }

    TimeSeries ts;
    ts.cycle = cycle;
    ts.name = value_column;
    int row = 1;
    while (std::getline(file, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_line(line);
        if (column >= cells.size()) {
            throw Error(ErrorCode::unparseable_value,
                        "row " + std::to_string(row) + ": missing cell in column '" +
                            value_column + "'");
        }
        ts.values.push_back(parse_cell(cells[column], row));
        if (row == 1 && !cells.empty()) {
            ts.origin_label = trim(cells[0]);
        }
        ++row;
    }
    return ts;
}

void write_csv(const TimeSeries& ts, const std::string& path, const std::string& value_column) {
    std::ofstream file(path);
    if (!file) {
        throw Error(ErrorCode::file_not_found, "cannot write '" + path + "'");
    }
    file << "period," << value_column << "\n";
    char buffer[64];
    for (std::size_t i = 0; i < ts.values.size(); ++i) {
        auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), ts.values[i]);
        file << (i + 1) << ',' << std::string_view(buffer, ptr - buffer) << "\n";
    }
}

std::pair<TimeSeries, TimeSeries> holdout_split(const TimeSeries& ts, SplitSpec split) {
    const int len = ts.length();
    if (split.nval < 1) {
        throw Error(ErrorCode::invalid_split, "nval must be >= 1");
    }
    if (split.dval < 1 || split.dval > len) {
        throw Error(ErrorCode::invalid_split,
                    "dval must be in [1, " + std::to_string(len) + "], got " +
                        std::to_string(split.dval));
    }
    if (split.dval - split.nval < 1) {
        throw Error(ErrorCode::invalid_split,
                    "dval - nval must leave at least one training value (dval=" +
                        std::to_string(split.dval) + ", nval=" + std::to_string(split.nval) + ")");
    }

    const int window_begin = len - split.dval;
    const int test_begin = len - split.nval;

    TimeSeries train;
    train.values.assign(ts.values.begin() + window_begin, ts.values.begin() + test_begin);
    train.cycle = ts.cycle;
    train.name = ts.name;

    TimeSeries test;
    test.values.assign(ts.values.begin() + test_begin, ts.values.end());
    test.cycle = ts.cycle;
    test.name = ts.name;

    return {std::move(train), std::move(test)};
}

Patch random_patch(const TimeSeries& ts, int size, std::mt19937_64& rng) {
    const int len = ts.length();
    if (size < 1) {
        throw Error(ErrorCode::invalid_config, "patch size must be >= 1");
    }
    if (size > len) {
        throw Error(ErrorCode::patch_too_large,
                    "patch size " + std::to_string(size) + " exceeds series length " +
                        std::to_string(len));
    }
    const auto positions = static_cast<std::uint64_t>(len - size + 1);
    Patch patch;
    patch.start_index = static_cast<int>(uniform_below(rng, positions)) + 1;
    const auto begin = ts.values.begin() + (patch.start_index - 1);
    patch.values.assign(begin, begin + size);
    return patch;
}

} // namespace tsbench
