#include "plap/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace plap::cli {

namespace {

constexpr double kWidth = 640.0, kHeight = 420.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string num(double x, int prec = 4) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Axis {
    bool log;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    bool accepts(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
    double map(double v) const { return log ? std::log10(v) : v; }
    void include(double v) {
        lo = std::min(lo, map(v));
        hi = std::max(hi, map(v));
    }
    void finish() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    double frac(double v) const { return (map(v) - lo) / (hi - lo); }
    double label_at(double f) const {
        const double m = lo + f * (hi - lo);
        return log ? std::pow(10.0, m) : m;
    }
};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    Axis ax{spec.log_x}, ay{spec.log_y};
    for (const auto& s : spec.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (ax.accepts(s.x[i]) && ay.accepts(s.y[i])) {
                ax.include(s.x[i]);
                ay.include(s.y[i]);
            }
        }
    }
    ax.finish();
    ay.finish();
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + ax.frac(v) * pw; };
    auto py = [&](double v) { return kTop + (1.0 - ay.frac(v)) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(spec.title) << "</text>\n";
    os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double f = k / 4.0;
        const double x = kLeft + f * pw, y = kTop + (1.0 - f) * ph;
        os << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(x) << "\" y2=\""
           << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
           << num(ax.label_at(f), 3) << "</text>\n";
        os << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft) << "\" y2=\""
           << num(y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
           << num(ay.label_at(f), 3) << "</text>\n";
    }
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10) << "\" text-anchor=\"middle\">"
       << escape(spec.x_label) << (spec.log_x ? " (log)" : "") << "</text>\n";
    os << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << num(kTop + ph / 2) << ")\">" << escape(spec.y_label) << (spec.log_y ? " (log)" : "") << "</text>\n";

    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const auto& series = spec.series[s];
        const char* color = kColors[s % std::size(kColors)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < std::min(series.x.size(), series.y.size()); ++i) {
            if (!ax.accepts(series.x[i]) || !ay.accepts(series.y[i])) continue;
            os << (first ? "" : " ") << num(px(series.x[i]), 6) << ',' << num(py(series.y[i]), 6);
            first = false;
        }
        os << "\"/>\n";
        const double ly = kTop + 14.0 + 14.0 * static_cast<double>(s);
        os << "<line x1=\"" << num(kLeft + pw - 110) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(kLeft + pw - 90)
           << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << num(kLeft + pw - 85) << "\" y=\"" << num(ly + 4) << "\">" << escape(series.name)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace plap::cli
