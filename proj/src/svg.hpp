#pragma once

#include <sstream>
#include <string>
#include <string_view>

namespace tsbench::svg {

std::string escape(std::string_view text);

/// Format helpers: fixed two decimals for coordinates, four significant
/// digits for value labels. Locale-independent.
std::string coord(double value);
std::string label(double value);

/// Minimal deterministic SVG document builder.
class Builder {
public:
    Builder(int width, int height);

    void open_group(const std::string& css_class);
    void close_group();

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0, const std::string& dash = "");
    void rect(double x, double y, double w, double h, const std::string& fill);
    void circle(double cx, double cy, double r, const std::string& stroke,
                const std::string& fill, double stroke_width = 1.0);
    void polyline(const std::string& points, const std::string& stroke, double width,
                  const std::string& css_class = "", const std::string& dash = "");
    void text(double x, double y, std::string_view content, int size,
              const std::string& anchor = "start", const std::string& fill = "#333333");

    std::string finish();

private:
    std::ostringstream out_;
};

inline constexpr const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

inline const char* series_color(std::size_t index) {
    return kPalette[index % 12];
}

} // namespace tsbench::svg
