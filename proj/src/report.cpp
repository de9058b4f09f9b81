#include "tsbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "svg.hpp"
#include "tsbench/error.hpp"

namespace tsbench {

namespace {

std::string fmt4(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

std::string pad(const std::string& text, std::size_t width, bool right_align) {
    if (text.size() >= width) {
        return text;
    }
    const std::string fill(width - text.size(), ' ');
    return right_align ? fill + text : text + fill;
}

std::string render_grid(const std::vector<std::vector<std::string>>& cells,
                        std::size_t aligned_columns) {
    std::vector<std::size_t> widths(aligned_columns, 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size() && c < aligned_columns; ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += "  ";
            }
            if (c < aligned_columns) {
                out += pad(row[c], widths[c], c > 0);
            } else {
                out += row[c];
            }
        }
        while (!out.empty() && out.back() == ' ') {
            out.pop_back();
        }
        out += "\n";
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 0.0;

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    static Range of(std::span<const double> values) {
        Range r{values.front(), values.front()};
        for (double v : values) {
            r.include(v);
        }
        return r;
    }
    bool degenerate() const { return hi == lo; }
    Range padded() const {
        if (degenerate()) {
            return {lo - 1.0, hi + 1.0};
        }
        const double margin = (hi - lo) * 0.05;
        return {lo - margin, hi + margin};
    }
    double fraction(double v) const { return (v - lo) / (hi - lo); }
};

Range value_range(const EvaluationResult& result) {
    Range range = Range::of(result.test_values);
    for (const auto& row : result.rows) {
        for (double v : row.forecast) {
            range.include(v);
        }
    }
    return range;
}

void draw_legend(svg::Builder& builder, const EvaluationResult& result, double x, double y) {
    builder.open_group("legend");
    builder.open_group("legend-test");
    builder.rect(x, y, 14, 14, "#000000");
    builder.text(x + 20, y + 11, "test values", 12);
    builder.close_group();
    y += 22;
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        builder.open_group("legend-entry");
        builder.rect(x, y, 14, 14, row.failed() ? "#bbbbbb" : svg::series_color(i));
        builder.text(x + 20, y + 11, row.failed() ? row.name + " (error)" : row.name, 12);
        builder.close_group();
        y += 22;
    }
    builder.close_group();
}

int label_stride(int count, int max_labels) {
    return std::max(1, (count + max_labels - 1) / max_labels);
}

} // namespace

std::string render_table(const EvaluationResult& result) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    header.insert(header.end(), result.metric_names.begin(), result.metric_names.end());
    header.push_back("exec_time");
    cells.push_back(header);

    for (const auto& row : result.rows) {
        std::vector<std::string> line{row.name};
        if (row.failed()) {
            line.push_back("ERROR: " + row.error);
            cells.push_back(std::move(line));
            continue;
        }
        for (double v : row.metric_values) {
            line.push_back(fmt4(v));
        }
        line.push_back(fmt4(row.exec_time));
        cells.push_back(std::move(line));
    }
    return render_grid(cells, header.size());
}

std::string render_table(const MonteCarloResult& result) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    header.insert(header.end(), result.method_names.begin(), result.method_names.end());
    cells.push_back(header);

    for (const auto& row : result.rows) {
        std::vector<std::string> line{std::to_string(row.start_index)};
        for (const auto& value : row.values) {
            line.push_back(value ? fmt4(*value) : "-");
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::string> mean_line{"Mean"};
    for (const auto& value : result.mean_row) {
        mean_line.push_back(value ? fmt4(*value) : "-");
    }
    cells.push_back(std::move(mean_line));
    return render_grid(cells, header.size());
}

namespace {

nlohmann::ordered_json config_json(const EvaluationConfig& config) {
    nlohmann::ordered_json j;
    j["nval"] = config.nval;
    j["dval"] = config.resolved_dval();
    j["strategy"] = std::string(to_string(config.strategy));
    j["seed"] = config.seed;
    j["metrics"] = config.metrics.names();
    auto methods = nlohmann::ordered_json::array();
    for (const auto& method : config.methods) {
        methods.push_back(method.display_name);
    }
    j["methods"] = std::move(methods);
    return j;
}

nlohmann::ordered_json error_table_json(const EvaluationResult& result) {
    nlohmann::ordered_json table;
    for (const auto& row : result.rows) {
        nlohmann::ordered_json entry;
        if (row.failed()) {
            entry["error"] = row.error;
        } else {
            for (std::size_t m = 0; m < result.metric_names.size(); ++m) {
                entry[result.metric_names[m]] = row.metric_values[m];
            }
            entry["exec_time"] = row.exec_time;
        }
        table[row.name] = std::move(entry);
    }
    return table;
}

nlohmann::ordered_json predicted_json(const EvaluationResult& result) {
    nlohmann::ordered_json predicted;
    predicted["test"] = result.test_values;
    for (const auto& row : result.rows) {
        if (!row.failed()) {
            predicted[row.name] = row.forecast;
        }
    }
    return predicted;
}

} // namespace

nlohmann::ordered_json to_json(const EvaluationResult& result) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["config"] = config_json(result.config);
    j["error_table"] = error_table_json(result);
    j["predicted"] = predicted_json(result);
    return j;
}

nlohmann::ordered_json to_json(const MonteCarloResult& result) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["config"] = config_json(result.config);

    nlohmann::ordered_json mc;
    mc["metric"] = result.metric_name;
    mc["size"] = result.patch_size;
    mc["iterations"] = result.rows.size();

    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        nlohmann::ordered_json entry;
        entry["start"] = row.start_index;
        nlohmann::ordered_json values;
        for (std::size_t m = 0; m < result.method_names.size(); ++m) {
            if (row.values[m]) {
                values[result.method_names[m]] = *row.values[m];
            } else {
                values[result.method_names[m]] = nullptr;
            }
        }
        entry["values"] = std::move(values);
        if (result.report_forecasts && i < result.iteration_results.size()) {
            entry["predicted"] = predicted_json(result.iteration_results[i]);
        }
        rows.push_back(std::move(entry));
    }
    mc["rows"] = std::move(rows);

    nlohmann::ordered_json mean;
    std::vector<std::string> incomplete;
    for (std::size_t m = 0; m < result.method_names.size(); ++m) {
        if (result.mean_row[m]) {
            mean[result.method_names[m]] = *result.mean_row[m];
        } else {
            mean[result.method_names[m]] = nullptr;
        }
        const bool missing_somewhere =
            std::any_of(result.rows.begin(), result.rows.end(),
                        [m](const MonteCarloRow& row) { return !row.values[m].has_value(); });
        if (missing_somewhere) {
            incomplete.push_back(result.method_names[m]);
        }
    }
    mc["mean"] = std::move(mean);
    if (!incomplete.empty()) {
        mc["incomplete"] = incomplete;
    }

    j["monte_carlo"] = std::move(mc);
    return j;
}

std::string render_comparison_chart(const EvaluationResult& result) {
    constexpr int kWidth = 960;
    constexpr int kHeight = 640;
    constexpr double kPlotLeft = 60;
    constexpr double kPlotRight = 700;
    constexpr double kPlotWidth = kPlotRight - kPlotLeft;
    constexpr double kBarTop = 50;
    constexpr double kBarBottom = 270;
    constexpr double kLineTop = 350;
    constexpr double kLineBottom = 590;

    svg::Builder builder(kWidth, kHeight);
    builder.text(kPlotLeft, 28, "error metrics and execution time", 14);

    // --- bar panel: one group per metric column, one bar per method ---
    std::vector<std::string> columns = result.metric_names;
    columns.push_back("exec_time");
    const auto groups = static_cast<double>(columns.size());
    const auto method_count = result.rows.size();

    builder.open_group("bars");
    builder.line(kPlotLeft, kBarBottom, kPlotRight, kBarBottom, "#333333");
    for (std::size_t g = 0; g < columns.size(); ++g) {
        double column_max = 0.0;
        for (const auto& row : result.rows) {
            if (row.failed()) {
                continue;
            }
            const double v =
                g < result.metric_names.size() ? row.metric_values[g] : row.exec_time;
            column_max = std::max(column_max, v);
        }
        const double slot = kPlotWidth / groups;
        const double slot_left = kPlotLeft + g * slot;
        const double bar_space = slot * 0.8;
        const double bar_width = bar_space / static_cast<double>(std::max<std::size_t>(method_count, 1));
        for (std::size_t i = 0; i < method_count; ++i) {
            const auto& row = result.rows[i];
            if (row.failed()) {
                continue;
            }
            const double v =
                g < result.metric_names.size() ? row.metric_values[g] : row.exec_time;
            const double height =
                column_max > 0.0 ? (v / column_max) * (kBarBottom - kBarTop) : 0.0;
            const double x = slot_left + slot * 0.1 + bar_width * static_cast<double>(i);
            builder.rect(x, kBarBottom - height, bar_width * 0.9, height, svg::series_color(i));
        }
        builder.text(slot_left + slot / 2, kBarBottom + 18, columns[g], 12, "middle");
        builder.text(slot_left + slot / 2, kBarTop - 8, "max " + svg::label(column_max), 10,
                     "middle", "#777777");
    }
    builder.close_group();

    // --- line panel: test values and each method's forecasts ---
    builder.text(kPlotLeft, kLineTop - 22, "forecasted values", 14);
    const int nval = static_cast<int>(result.test_values.size());
    const Range range = value_range(result).padded();
    const auto x_at = [&](int step) {
        if (nval == 1) {
            return kPlotLeft + kPlotWidth / 2;
        }
        return kPlotLeft + kPlotWidth * (step - 1) / static_cast<double>(nval - 1);
    };
    const auto y_at = [&](double v) {
        return kLineBottom - range.fraction(v) * (kLineBottom - kLineTop);
    };

    builder.open_group("lines");
    builder.line(kPlotLeft, kLineBottom, kPlotRight, kLineBottom, "#333333");
    builder.line(kPlotLeft, kLineTop, kPlotLeft, kLineBottom, "#333333");
    builder.text(kPlotLeft - 6, y_at(range.lo) + 4, svg::label(range.lo), 10, "end");
    builder.text(kPlotLeft - 6, y_at(range.hi) + 4, svg::label(range.hi), 10, "end");
    const int stride = label_stride(nval, 16);
    for (int step = 1; step <= nval; ++step) {
        if ((step - 1) % stride == 0 || step == nval) {
            builder.text(x_at(step), kLineBottom + 16, std::to_string(step), 10, "middle");
        }
    }

    auto points_of = [&](std::span<const double> values) {
        std::string points;
        for (int step = 1; step <= static_cast<int>(values.size()); ++step) {
            if (step > 1) {
                points += ' ';
            }
            points += svg::coord(x_at(step)) + ',' + svg::coord(y_at(values[step - 1]));
        }
        return points;
    };
    builder.polyline(points_of(result.test_values), "#000000", 3.0, "series series-test");
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        if (result.rows[i].failed()) {
            continue;
        }
        builder.polyline(points_of(result.rows[i].forecast), svg::series_color(i), 1.5,
                         "series series-method");
    }
    builder.close_group();

    draw_legend(builder, result, 730, 60);
    return builder.finish();
}

std::string render_polar_chart(const EvaluationResult& result) {
    constexpr int kWidth = 900;
    constexpr int kHeight = 640;
    constexpr double kCenterX = 320;
    constexpr double kCenterY = 320;
    constexpr double kInnerRadius = 60;
    constexpr double kOuterRadius = 240;
    constexpr double kLabelRadius = 262;

    svg::Builder builder(kWidth, kHeight);
    builder.text(40, 28, "forecasted values by step", 14);

    const int nval = static_cast<int>(result.test_values.size());
    const auto angle_at = [&](int step) {
        return -std::numbers::pi / 2 +
               2.0 * std::numbers::pi * (step - 1) / static_cast<double>(nval);
    };

    // spokes and step labels on the circle
    builder.open_group("spokes");
    const int stride = label_stride(nval, 36);
    for (int step = 1; step <= nval; ++step) {
        const double angle = angle_at(step);
        builder.line(kCenterX, kCenterY, kCenterX + kOuterRadius * std::cos(angle),
                     kCenterY + kOuterRadius * std::sin(angle), "#dddddd");
        if ((step - 1) % stride == 0) {
            builder.text(kCenterX + kLabelRadius * std::cos(angle),
                         kCenterY + kLabelRadius * std::sin(angle) + 4, std::to_string(step), 11,
                         "middle");
        }
    }
    builder.close_group();

    const Range range = value_range(result);
    if (range.degenerate()) {
        // a radial scale needs spread; all-equal values collapse to one ring
        const double radius = (kInnerRadius + kOuterRadius) / 2;
        builder.circle(kCenterX, kCenterY, radius, "#000000", "none", 2.0);
        builder.text(kCenterX, kCenterY + 4,
                     "all values equal " + svg::label(range.lo), 12, "middle");
        draw_legend(builder, result, 660, 60);
        return builder.finish();
    }

    const auto radius_at = [&](double v) {
        return kInnerRadius + range.fraction(v) * (kOuterRadius - kInnerRadius);
    };

    builder.open_group("rings");
    for (double v : {range.lo, (range.lo + range.hi) / 2, range.hi}) {
        const double r = radius_at(v);
        builder.circle(kCenterX, kCenterY, r, "#cccccc", "none");
        builder.text(kCenterX + 4, kCenterY - r - 3, svg::label(v), 9, "start", "#777777");
    }
    builder.close_group();

    auto ring_points = [&](std::span<const double> values) {
        std::string points;
        for (int step = 1; step <= static_cast<int>(values.size()); ++step) {
            const double angle = angle_at(step);
            const double r = radius_at(values[step - 1]);
            if (step > 1) {
                points += ' ';
            }
            points += svg::coord(kCenterX + r * std::cos(angle)) + ',' +
                      svg::coord(kCenterY + r * std::sin(angle));
        }
        // close the loop
        const double r0 = radius_at(values[0]);
        points += ' ' + svg::coord(kCenterX + r0 * std::cos(angle_at(1))) + ',' +
                  svg::coord(kCenterY + r0 * std::sin(angle_at(1)));
        return points;
    };

    builder.open_group("series-rings");
    builder.polyline(ring_points(result.test_values), "#000000", 3.0, "series series-test");
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        if (result.rows[i].failed()) {
            continue;
        }
        builder.polyline(ring_points(result.rows[i].forecast), svg::series_color(i), 1.5,
                         "series series-method");
    }
    builder.close_group();

    draw_legend(builder, result, 660, 60);
    return builder.finish();
}

std::string render_monte_carlo_chart(const MonteCarloResult& result) {
    constexpr int kWidth = 960;
    constexpr int kHeight = 480;
    constexpr double kPlotLeft = 60;
    constexpr double kPlotRight = 700;
    constexpr double kPlotTop = 50;
    constexpr double kPlotBottom = 420;

    svg::Builder builder(kWidth, kHeight);
    builder.text(kPlotLeft, 28, result.metric_name + " per random patch", 14);

    const int iterations = static_cast<int>(result.rows.size());
    Range range{0.0, 0.0};
    bool first = true;
    for (const auto& row : result.rows) {
        for (const auto& value : row.values) {
            if (value) {
                if (first) {
                    range = Range{*value, *value};
                    first = false;
                } else {
                    range.include(*value);
                }
            }
        }
    }
    const Range padded = range.padded();

    const auto x_at = [&](int iteration) {
        if (iterations == 1) {
            return kPlotLeft + (kPlotRight - kPlotLeft) / 2;
        }
        return kPlotLeft +
               (kPlotRight - kPlotLeft) * (iteration - 1) / static_cast<double>(iterations - 1);
    };
    const auto y_at = [&](double v) {
        return kPlotBottom - padded.fraction(v) * (kPlotBottom - kPlotTop);
    };

    builder.open_group("axes");
    builder.line(kPlotLeft, kPlotBottom, kPlotRight, kPlotBottom, "#333333");
    builder.line(kPlotLeft, kPlotTop, kPlotLeft, kPlotBottom, "#333333");
    builder.text(kPlotLeft - 6, y_at(padded.lo) + 4, svg::label(padded.lo), 10, "end");
    builder.text(kPlotLeft - 6, y_at(padded.hi) + 4, svg::label(padded.hi), 10, "end");
    const int stride = label_stride(iterations, 20);
    for (int i = 1; i <= iterations; ++i) {
        if ((i - 1) % stride == 0 || i == iterations) {
            builder.text(x_at(i), kPlotBottom + 16,
                         std::to_string(result.rows[static_cast<std::size_t>(i - 1)].start_index),
                         10, "middle");
        }
    }
    builder.text((kPlotLeft + kPlotRight) / 2, kPlotBottom + 34, "patch start index", 11,
                 "middle", "#777777");
    builder.close_group();

    builder.open_group("traces");
    for (std::size_t m = 0; m < result.method_names.size(); ++m) {
        std::string points;
        for (int i = 1; i <= iterations; ++i) {
            const auto& value = result.rows[static_cast<std::size_t>(i - 1)].values[m];
            if (!value) {
                continue;
            }
            if (!points.empty()) {
                points += ' ';
            }
            points += svg::coord(x_at(i)) + ',' + svg::coord(y_at(*value));
            builder.circle(x_at(i), y_at(*value), 3.0, svg::series_color(m),
                           svg::series_color(m));
        }
        if (!points.empty()) {
            builder.polyline(points, svg::series_color(m), 1.5, "series series-method");
        }
        if (result.mean_row[m]) {
            builder.line(kPlotLeft, y_at(*result.mean_row[m]), kPlotRight,
                         y_at(*result.mean_row[m]), svg::series_color(m), 1.0, "6,4");
        }
    }
    builder.close_group();

    builder.open_group("legend");
    double y = 60;
    for (std::size_t m = 0; m < result.method_names.size(); ++m) {
        builder.open_group("legend-entry");
        builder.rect(730, y, 14, 14, svg::series_color(m));
        builder.text(750, y + 11, result.method_names[m], 12);
        builder.close_group();
        y += 22;
    }
    builder.close_group();
    return builder.finish();
}

EvaluationResult strip_timing(EvaluationResult result) {
    for (auto& row : result.rows) {
        row.exec_time = 0.0;
    }
    return result;
}

MonteCarloResult strip_timing(MonteCarloResult result) {
    for (auto& iteration : result.iteration_results) {
        for (auto& row : iteration.rows) {
            row.exec_time = 0.0;
        }
    }
    return result;
}

ReportBundle make_report_bundle(const EvaluationResult& result) {
    ReportBundle bundle;
    bundle.table_text = render_table(result);
    bundle.result_json = to_json(result);
    bundle.charts.emplace_back("comparison.svg", render_comparison_chart(result));
    bundle.charts.emplace_back("polar.svg", render_polar_chart(result));
    return bundle;
}

ReportBundle make_report_bundle(const MonteCarloResult& result) {
    ReportBundle bundle;
    bundle.table_text = render_table(result);
    bundle.result_json = to_json(result);
    bundle.charts.emplace_back("monte_carlo.svg", render_monte_carlo_chart(result));
    if (result.report_each) {
        for (std::size_t i = 0; i < result.iteration_results.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof(name), "comparison_iter_%03zu.svg", i + 1);
            bundle.charts.emplace_back(name,
                                       render_comparison_chart(result.iteration_results[i]));
        }
    }
    return bundle;
}

void write_report_bundle(const ReportBundle& bundle, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto write = [&](const std::filesystem::path& name, const std::string& content) {
        std::ofstream file(out_dir / name, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::file_not_found,
                        "cannot write '" + (out_dir / name).string() + "'");
        }
        file << content;
    };
    write("table.txt", bundle.table_text);
    write("result.json", bundle.result_json.dump(2) + "\n");
    for (const auto& [name, content] : bundle.charts) {
        write(name, content);
    }
}

} // namespace tsbench
