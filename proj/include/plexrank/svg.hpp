#pragma once

#include <string>
#include <vector>

namespace plexrank::svg {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// One plotted curve. Step series are drawn as staircase segments
/// (horizontal-then-vertical), plain series as straight polylines.
struct Series {
    std::string label;
    std::vector<Point> points;
    bool step = false;
};

/// A labeled scatter point; the label may be empty.
struct Marker {
    double x = 0.0;
    double y = 0.0;
    std::string label;
};

/// Minimal self-contained chart: axes with tick labels, optional guide lines,
/// polyline series and scatter markers. Output is a standalone SVG document.
struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    std::vector<Series> series;
    std::vector<Marker> markers;
    std::vector<double> x_guides;  // vertical guide lines at data x
    std::vector<double> y_guides;  // horizontal guide lines at data y
    int width = 640;
    int height = 420;

    std::string render() const;
};

std::string escape(const std::string& text);

}  // namespace plexrank::svg
