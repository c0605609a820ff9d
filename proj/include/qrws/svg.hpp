// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

namespace qrws {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct PlotLabels {
    std::string title;
    std::string x;
    std::string y;
};

/// Line plot with axes, five ticks per axis and a legend. Non-finite samples
/// break the polyline.
std::string line_plot_svg(const PlotLabels &labels, std::span<const PlotSeries> series);

/// Heatmap of values[i * ys.size() + k] at (xs[i], ys[k]), viridis-like ramp.
std::string heatmap_svg(const PlotLabels &labels, std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> values);

}  // namespace qrws
