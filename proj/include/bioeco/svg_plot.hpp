#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bioeco {

enum class PlotKind { frontier_scatter, population_path };

enum class SeriesStyle { markers, line };

struct Series {
    std::string label;
    SeriesStyle style = SeriesStyle::markers;
    std::vector<std::pair<double, double>> points;
    std::string color = "#444444";
    double size = 3.0;  // marker radius or stroke width, px
};

struct PlotSpec {
    PlotKind kind = PlotKind::frontier_scatter;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width_px = 720;
    int height_px = 480;
};

// Renders the spec to a standalone SVG document. Output is a pure
// function of the spec. Throws on an empty series list or a non-finite
// coordinate, naming the series and point index.
std::string emit_svg(const PlotSpec& spec);

}  // namespace bioeco
