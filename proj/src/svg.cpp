#include "svg.hpp"

#include <cstdio>

namespace tsbench::svg {

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string coord(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string label(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4g", value);
    return buffer;
}

Builder::Builder(int width, int height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
         << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
         << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
         << "\" fill=\"#ffffff\"/>\n";
}

void Builder::open_group(const std::string& css_class) {
    out_ << "<g class=\"" << css_class << "\">\n";
}

void Builder::close_group() {
    out_ << "</g>\n";
}

void Builder::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                   double width, const std::string& dash) {
    out_ << "<line x1=\"" << coord(x1) << "\" y1=\"" << coord(y1) << "\" x2=\"" << coord(x2)
         << "\" y2=\"" << coord(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << coord(width) << "\"";
    if (!dash.empty()) {
        out_ << " stroke-dasharray=\"" << dash << "\"";
    }
    out_ << "/>\n";
}

void Builder::rect(double x, double y, double w, double h, const std::string& fill) {
    out_ << "<rect x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" width=\"" << coord(w)
         << "\" height=\"" << coord(h) << "\" fill=\"" << fill << "\"/>\n";
}

void Builder::circle(double cx, double cy, double r, const std::string& stroke,
                     const std::string& fill, double stroke_width) {
    out_ << "<circle cx=\"" << coord(cx) << "\" cy=\"" << coord(cy) << "\" r=\"" << coord(r)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << coord(stroke_width)
         << "\" fill=\"" << fill << "\"/>\n";
}

void Builder::polyline(const std::string& points, const std::string& stroke, double width,
                       const std::string& css_class, const std::string& dash) {
    out_ << "<polyline";
    if (!css_class.empty()) {
        out_ << " class=\"" << css_class << "\"";
    }
    out_ << " points=\"" << points << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"" << coord(width) << "\"";
    if (!dash.empty()) {
        out_ << " stroke-dasharray=\"" << dash << "\"";
    }
    out_ << "/>\n";
}

void Builder::text(double x, double y, std::string_view content, int size,
                   const std::string& anchor, const std::string& fill) {
    out_ << "<text x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" font-size=\"" << size
         << "\" font-family=\"Helvetica, Arial, sans-serif\" text-anchor=\"" << anchor
         << "\" fill=\"" << fill << "\">" << escape(content) << "</text>\n";
}

std::string Builder::finish() {
    out_ << "</svg>\n";
    return out_.str();
}

} // namespace tsbench::svg
