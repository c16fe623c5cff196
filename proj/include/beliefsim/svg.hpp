#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace beliefsim {

// Minimal SVG line-chart writer for experiment figures. Panels are laid out
// on a fixed grid; every series in a panel shares the panel's x vector.
struct SvgSeries {
    std::vector<double> y;
    std::string color = "#1f77b4";
};

struct SvgPanel {
    std::string title;
    std::vector<SvgSeries> series;
};

struct SvgFigure {
    std::size_t n_cols = 2;
    bool common_y = false;  // one y-range shared by every panel
    std::vector<double> x;  // shared abscissa
    std::vector<SvgPanel> panels;
    std::string metadata;   // emitted as a data-config attribute on the root
};

std::string render_svg(const SvgFigure& fig);
void write_svg(const SvgFigure& fig, const std::filesystem::path& path);

}  // namespace beliefsim
