#include "beliefsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "beliefsim/errors.hpp"

namespace beliefsim {

namespace {

constexpr double kPanelW = 600.0;
constexpr double kPanelH = 400.0;
constexpr double kMargin = 55.0;

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void absorb(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(lo < hi)) {
            const double w = std::max(std::abs(lo), 1.0) * 0.1;
            lo -= w;
            hi += w;
        } else {
            const double w = 0.05 * (hi - lo);
            lo -= w;
            hi += w;
        }
    }
};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

std::string render_svg(const SvgFigure& fig) {
    if (fig.panels.empty()) throw std::invalid_argument("render_svg: no panels");
    if (fig.x.size() < 2) throw std::invalid_argument("render_svg: need at least two x points");
    if (fig.n_cols == 0) throw std::invalid_argument("render_svg: n_cols must be positive");
    for (const auto& p : fig.panels) {
        if (p.series.empty()) throw std::invalid_argument("render_svg: panel has no series");
        for (const auto& s : p.series) {
            if (s.y.size() != fig.x.size())
                throw std::invalid_argument("render_svg: series length does not match x");
            for (double v : s.y)
                if (!std::isfinite(v))
                    throw std::invalid_argument("render_svg: non-finite series value");
        }
    }

    const std::size_t n_rows = (fig.panels.size() + fig.n_cols - 1) / fig.n_cols;
    const double width = kPanelW * static_cast<double>(fig.n_cols);
    const double height = kPanelH * static_cast<double>(n_rows);

    Range xr;
    for (double v : fig.x) xr.absorb(v);
    xr.pad();

    Range shared_y;
    if (fig.common_y) {
        for (const auto& p : fig.panels)
            for (const auto& s : p.series)
                for (double v : s.y) shared_y.absorb(v);
        shared_y.pad();
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\"";
    if (!fig.metadata.empty()) out += " data-config=\"" + fig.metadata + "\"";
    out += ">\n";
    out += "<rect width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";

    for (std::size_t i = 0; i < fig.panels.size(); ++i) {
        const SvgPanel& panel = fig.panels[i];
        const double tx = static_cast<double>(i % fig.n_cols) * kPanelW;
        const double ty = static_cast<double>(i / fig.n_cols) * kPanelH;
        Range yr = shared_y;
        if (!fig.common_y) {
            yr = Range{};
            for (const auto& s : panel.series)
                for (double v : s.y) yr.absorb(v);
            yr.pad();
        }
        const double plot_w = kPanelW - 2.0 * kMargin;
        const double plot_h = kPanelH - 2.0 * kMargin;
        const auto map_x = [&](double v) {
            return kMargin + plot_w * (v - xr.lo) / (xr.hi - xr.lo);
        };
        const auto map_y = [&](double v) {
            return kPanelH - kMargin - plot_h * (v - yr.lo) / (yr.hi - yr.lo);
        };

        out += "<g class=\"panel\" transform=\"translate(" + num(tx) + "," + num(ty) + ")\">\n";
        out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
               num(plot_w) + "\" height=\"" + num(plot_h) +
               "\" fill=\"none\" stroke=\"#888888\"/>\n";
        out += "<text x=\"" + num(kPanelW / 2.0) + "\" y=\"" + num(kMargin - 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
               panel.title + "</text>\n";
        out += "<text x=\"" + num(kMargin - 6.0) + "\" y=\"" + num(kPanelH - kMargin) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               label(yr.lo) + "</text>\n";
        out += "<text x=\"" + num(kMargin - 6.0) + "\" y=\"" + num(kMargin + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               label(yr.hi) + "</text>\n";
        out += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kPanelH - kMargin + 16.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               label(xr.lo) + "</text>\n";
        out += "<text x=\"" + num(kPanelW - kMargin) + "\" y=\"" +
               num(kPanelH - kMargin + 16.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               label(xr.hi) + "</text>\n";
        for (const auto& s : panel.series) {
            out += "<polyline fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < fig.x.size(); ++k) {
                if (k) out += ' ';
                out += num(map_x(fig.x[k])) + "," + num(map_y(s.y[k]));
            }
            out += "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_svg(const SvgFigure& fig, const std::filesystem::path& path) {
    const std::string body = render_svg(fig);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path.string());
    f << body;
    if (!f) throw ConfigError("failed writing output file: " + path.string());
}

}  // namespace beliefsim
