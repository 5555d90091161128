// Minimal line-plot emitter: axes, tick labels, one polyline per series.
#pragma once

#include <string>
#include <vector>

namespace plap::cli {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
};

/// Non-positive values are dropped on log axes; non-finite values always.
std::string render_svg(const PlotSpec& spec);

}  // namespace plap::cli
