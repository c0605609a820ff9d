// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrws/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace qrws {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish() {
        if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
        if (hi - lo < 1e-300) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Frame {
    Range xr, yr;
    double px(double x) const { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kWidth - kLeft - kRight); }
    double py(double y) const { return kHeight - kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom); }
};

std::string header(const PlotLabels &labels) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n",
        kWidth, kHeight, (kLeft + kWidth - kRight) / 2.0, escape(labels.title));
}

std::string axes(const Frame &f, const PlotLabels &labels) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    std::string out = fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                                  x0, y1, x1 - x0, y0 - y1);
    for (int t = 0; t <= 4; ++t) {
        const double xv = f.xr.lo + (f.xr.hi - f.xr.lo) * t / 4.0;
        const double yv = f.yr.lo + (f.yr.hi - f.yr.lo) * t / 4.0;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>"
                           "<text x=\"{0:.2f}\" y=\"{3}\" text-anchor=\"middle\">{4:.3g}</text>\n",
                           f.px(xv), y0, y0 + 5, y0 + 18, xv);
        out += fmt::format("<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"black\"/>"
                           "<text x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.3g}</text>\n",
                           x0 - 5, f.py(yv), x0, x0 - 8, f.py(yv) + 4, yv);
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (x0 + x1) / 2, kHeight - 12,
                       escape(labels.x));
    out += fmt::format("<text transform=\"translate(18 {}) rotate(-90)\" text-anchor=\"middle\">{}</text>\n",
                       (y0 + y1) / 2, escape(labels.y));
    return out;
}

// Piecewise-linear approximation of the viridis ramp.
std::string ramp(double t) {
    static constexpr std::array<std::array<double, 3>, 5> stops{{
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0) * (stops.size() - 1);
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
    const double w = t - static_cast<double>(i);
    auto mix = [&](int c) { return static_cast<int>(std::lround(stops[i][c] * (1 - w) + stops[i + 1][c] * w)); };
    return fmt::format("#{:02x}{:02x}{:02x}", mix(0), mix(1), mix(2));
}

}  // namespace

std::string line_plot_svg(const PlotLabels &labels, std::span<const PlotSeries> series) {
    Frame f;
    for (const auto &s : series) {
        for (double x : s.x) f.xr.add(x);
        for (double y : s.y) f.yr.add(y);
    }
    f.xr.finish();
    f.yr.finish();

    std::string out = header(labels) + axes(f, labels);
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto &s = series[k];
        std::string points;
        auto flush = [&] {
            if (points.empty()) return;
            out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n",
                               s.color, s.dashed ? " stroke-dasharray=\"6 4\"" : "", points);
            points.clear();
        };
        const std::size_t n = std::min(s.x.size(), s.y.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            points += fmt::format("{}{:.2f},{:.2f}", points.empty() ? "" : " ", f.px(s.x[i]), f.py(s.y[i]));
        }
        flush();
        const double ly = kTop + 10 + 18.0 * static_cast<double>(k);
        const double lx = kWidth - kRight + 12;
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"{}/>"
                           "<text x=\"{}\" y=\"{}\">{}</text>\n",
                           lx, ly, lx + 22, ly, s.color, s.dashed ? " stroke-dasharray=\"6 4\"" : "", lx + 28, ly + 4,
                           escape(s.label));
    }
    out += "</svg>\n";
    return out;
}

std::string heatmap_svg(const PlotLabels &labels, std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> values) {
    auto half_cell = [](std::span<const double> v) {
        return v.size() > 1 ? (v.back() - v.front()) / (2.0 * static_cast<double>(v.size() - 1)) : 0.5;
    };
    const double hx = half_cell(xs), hy = half_cell(ys);
    Frame f;
    if (!xs.empty()) f.xr = {xs.front() - hx, xs.back() + hx};
    if (!ys.empty()) f.yr = {ys.front() - hy, ys.back() + hy};
    f.xr.finish();
    f.yr.finish();
    Range vr;
    for (double v : values) vr.add(v);
    vr.finish();

    std::string out = header(labels);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t k = 0; k < ys.size(); ++k) {
            const double v = values[i * ys.size() + k];
            const double x0 = f.px(xs[i] - hx), x1 = f.px(xs[i] + hx);
            const double y0 = f.py(ys[k] + hy), y1 = f.py(ys[k] - hy);
            out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n",
                               x0, y0, x1 - x0 + 0.05, y1 - y0 + 0.05, ramp((v - vr.lo) / (vr.hi - vr.lo)));
        }
    }
    out += axes(f, labels);
    const double bx = kWidth - kRight + 20, bh = kHeight - kTop - kBottom;
    for (int s = 0; s < 50; ++s) {
        out += fmt::format("<rect x=\"{}\" y=\"{:.2f}\" width=\"18\" height=\"{:.2f}\" fill=\"{}\"/>\n", bx,
                           kTop + bh * (49 - s) / 50.0, bh / 50.0 + 0.05, ramp(s / 49.0));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\">{:.3g}</text><text x=\"{}\" y=\"{}\">{:.3g}</text>\n", bx + 24,
                       kTop + 10, vr.hi, bx + 24, kHeight - kBottom, vr.lo);
    out += "</svg>\n";
    return out;
}

}  // namespace qrws
