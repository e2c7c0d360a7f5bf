// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depthlab/dataset.hpp"

namespace depthlab {

using Polyline = std::vector<std::pair<double, double>>;

/// Iso-level curves of a scalar field sampled on a grid (values row-major,
/// iy outer), by marching squares with linear edge interpolation; the
/// saddle cases are disambiguated by the cell-center average. Segments are
/// chained into polylines.
std::vector<Polyline> marching_squares(const GridSpec& grid, const std::vector<double>& values,
                                       double level);

/// A labelled family of polylines rendered as one SVG layer.
struct SvgLayer {
    std::vector<Polyline> lines;
    std::string color;
    bool dashed = false;
    std::string label;
};

/// Minimal standalone SVG: frame, axis labels, and the given layers scaled
/// into the data box [x_min,x_max] x [y_min,y_max].
std::string render_svg(const GridSpec& box, const std::vector<SvgLayer>& layers,
                       const std::string& title);

}  // namespace depthlab
