#include "plexrank/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace plexrank::svg {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

std::string escape(const std::string& text) {
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

std::string Chart::render() const {
    const double margin_left = 64, margin_right = 24, margin_top = 36, margin_bottom = 52;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;
    const double x_span = x_max > x_min ? x_max - x_min : 1.0;
    const double y_span = y_max > y_min ? y_max - y_min : 1.0;

    auto px = [&](double x) { return margin_left + (x - x_min) / x_span * plot_w; };
    auto py = [&](double y) { return margin_top + plot_h - (y - y_min) / y_span * plot_h; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"14\">"
            << escape(title) << "</text>\n";
    }

    // axes
    out << "<line x1=\"" << num(margin_left) << "\" y1=\"" << num(margin_top)
        << "\" x2=\"" << num(margin_left) << "\" y2=\"" << num(margin_top + plot_h)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << num(margin_left) << "\" y1=\"" << num(margin_top + plot_h)
        << "\" x2=\"" << num(margin_left + plot_w) << "\" y2=\""
        << num(margin_top + plot_h) << "\" stroke=\"black\"/>\n";

    // four ticks per axis
    for (int t = 0; t <= 4; ++t) {
        double fx = x_min + x_span * t / 4.0;
        double fy = y_min + y_span * t / 4.0;
        out << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(margin_top + plot_h + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_text(fx) << "</text>\n";
        out << "<text x=\"" << num(margin_left - 8) << "\" y=\"" << num(py(fy) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_text(fy) << "</text>\n";
    }
    if (!x_label.empty()) {
        out << "<text x=\"" << num(margin_left + plot_w / 2) << "\" y=\""
            << num(height - 12)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << escape(x_label) << "</text>\n";
    }
    if (!y_label.empty()) {
        out << "<text x=\"16\" y=\"" << num(margin_top + plot_h / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
               "transform=\"rotate(-90 16 "
            << num(margin_top + plot_h / 2) << ")\">" << escape(y_label) << "</text>\n";
    }

    for (double gx : x_guides) {
        out << "<line class=\"guide\" x1=\"" << num(px(gx)) << "\" y1=\""
            << num(margin_top) << "\" x2=\"" << num(px(gx)) << "\" y2=\""
            << num(margin_top + plot_h)
            << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (double gy : y_guides) {
        out << "<line class=\"guide\" x1=\"" << num(margin_left) << "\" y1=\""
            << num(py(gy)) << "\" x2=\"" << num(margin_left + plot_w) << "\" y2=\""
            << num(py(gy)) << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const Series& sr = series[s];
        const char* color = kPalette[s % kPalette.size()];
        std::ostringstream pts;
        for (std::size_t i = 0; i < sr.points.size(); ++i) {
            if (sr.step && i > 0) {
                // staircase: hold previous y until this x
                pts << num(px(sr.points[i].x)) << "," << num(py(sr.points[i - 1].y)) << " ";
            }
            pts << num(px(sr.points[i].x)) << "," << num(py(sr.points[i].y));
            if (i + 1 < sr.points.size()) pts << " ";
        }
        out << "<polyline class=\"series\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
        // legend swatch
        double ly = margin_top + 14 * static_cast<double>(s);
        out << "<rect x=\"" << num(margin_left + plot_w - 110) << "\" y=\"" << num(ly)
            << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << num(margin_left + plot_w - 96) << "\" y=\"" << num(ly + 9)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(sr.label)
            << "</text>\n";
    }

    for (const Marker& m : markers) {
        out << "<circle class=\"point\" cx=\"" << num(px(m.x)) << "\" cy=\""
            << num(py(m.y)) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
        if (!m.label.empty()) {
            out << "<text x=\"" << num(px(m.x) + 5) << "\" y=\"" << num(py(m.y) - 4)
                << "\" font-family=\"sans-serif\" font-size=\"10\">" << escape(m.label)
                << "</text>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace plexrank::svg
