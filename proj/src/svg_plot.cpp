#include "bioeco/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bioeco/csv.hpp"

namespace bioeco {

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string px(double v) {
    return fmt_fixed(v, 2);
}

}  // namespace

std::string emit_svg(const PlotSpec& spec) {
    if (spec.series.empty()) {
        throw std::invalid_argument("plot spec needs at least one series");
    }
    if (spec.width_px <= 0 || spec.height_px <= 0) {
        throw std::invalid_argument("plot dimensions must be positive");
    }

    double x_min = 0;
    double x_max = 0;
    double y_min = 0;
    double y_max = 0;
    for (const auto& series : spec.series) {
        for (std::size_t i = 0; i < series.points.size(); ++i) {
            auto [x, y] = series.points[i];
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw std::invalid_argument("series \"" + series.label + "\" point " +
                                            std::to_string(i) + ": non-finite coordinate");
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) {
        x_max = x_min + 1;
    }
    if (y_max == y_min) {
        y_max = y_min + 1;
    }
    // headroom so boundary markers are not clipped
    double x_pad = 0.05 * (x_max - x_min);
    double y_pad = 0.05 * (y_max - y_min);
    x_max += x_pad;
    y_max += y_pad;

    const double margin_left = 64;
    const double margin_right = 16;
    const double margin_top = spec.title.empty() ? 16 : 36;
    const double margin_bottom = 48;
    const double plot_w = spec.width_px - margin_left - margin_right;
    const double plot_h = spec.height_px - margin_top - margin_bottom;

    auto to_x = [&](double x) { return margin_left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto to_y = [&](double y) {
        return margin_top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width_px << "\" height=\""
        << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.height_px
        << "\">\n";
    svg << "<rect width=\"" << spec.width_px << "\" height=\"" << spec.height_px
        << "\" fill=\"white\"/>\n";

    if (!spec.title.empty()) {
        svg << "<text x=\"" << px(spec.width_px / 2.0)
            << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
            << xml_escape(spec.title) << "</text>\n";
    }

    // axes
    svg << "<g class=\"axes\" stroke=\"#222222\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << px(margin_left) << "\" y1=\"" << px(margin_top + plot_h) << "\" x2=\""
        << px(margin_left + plot_w) << "\" y2=\"" << px(margin_top + plot_h) << "\"/>\n";
    svg << "<line x1=\"" << px(margin_left) << "\" y1=\"" << px(margin_top) << "\" x2=\""
        << px(margin_left) << "\" y2=\"" << px(margin_top + plot_h) << "\"/>\n";
    svg << "</g>\n";

    // ticks and value labels
    svg << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#222222\">\n";
    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        double fx = x_min + (x_max - x_min) * i / n_ticks;
        double gx = to_x(fx);
        svg << "<line x1=\"" << px(gx) << "\" y1=\"" << px(margin_top + plot_h) << "\" x2=\""
            << px(gx) << "\" y2=\"" << px(margin_top + plot_h + 4)
            << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << px(gx) << "\" y=\"" << px(margin_top + plot_h + 16)
            << "\" text-anchor=\"middle\">" << fmt_general(fx, 4) << "</text>\n";
        double fy = y_min + (y_max - y_min) * i / n_ticks;
        double gy = to_y(fy);
        svg << "<line x1=\"" << px(margin_left - 4) << "\" y1=\"" << px(gy) << "\" x2=\""
            << px(margin_left) << "\" y2=\"" << px(gy)
            << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << px(margin_left - 6) << "\" y=\"" << px(gy + 3)
            << "\" text-anchor=\"end\">" << fmt_general(fy, 4) << "</text>\n";
    }
    svg << "</g>\n";

    if (!spec.x_label.empty()) {
        svg << "<text x=\"" << px(margin_left + plot_w / 2) << "\" y=\""
            << px(spec.height_px - 10)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << xml_escape(spec.x_label) << "</text>\n";
    }
    if (!spec.y_label.empty()) {
        double cx = 14;
        double cy = margin_top + plot_h / 2;
        svg << "<text x=\"" << px(cx) << "\" y=\"" << px(cy)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
            << "transform=\"rotate(-90 " << px(cx) << ' ' << px(cy) << ")\">"
            << xml_escape(spec.y_label) << "</text>\n";
    }

    for (const auto& series : spec.series) {
        svg << "<g class=\"series\" data-label=\"" << xml_escape(series.label) << "\">\n";
        if (series.style == SeriesStyle::line) {
            svg << "<polyline fill=\"none\" stroke=\"" << xml_escape(series.color)
                << "\" stroke-width=\"" << px(series.size) << "\" points=\"";
            for (std::size_t i = 0; i < series.points.size(); ++i) {
                if (i) {
                    svg << ' ';
                }
                svg << px(to_x(series.points[i].first)) << ',' << px(to_y(series.points[i].second));
            }
            svg << "\"/>\n";
        } else {
            for (const auto& [x, y] : series.points) {
                svg << "<circle cx=\"" << px(to_x(x)) << "\" cy=\"" << px(to_y(y)) << "\" r=\""
                    << px(series.size) << "\" fill=\"" << xml_escape(series.color) << "\"/>\n";
            }
        }
        svg << "</g>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace bioeco
