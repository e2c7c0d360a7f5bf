// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "depthlab/errors.hpp"

namespace depthlab {

/// A d-dimensional observation (d >= 1), all coordinates finite.
using Point = std::vector<double>;

/// An ordered collection of equal-dimension points, stored column-major so
/// that per-coordinate arrays can be handed to the SIMD kernels directly.
class Dataset {
  public:
    /// Validates and ingests a point list. Throws EmptyInputError,
    /// DimensionMismatchError or ValueError.
    explicit Dataset(const std::vector<Point>& points);

    /// Builds directly from coordinate columns (all of equal length n >= 1).
    static Dataset from_columns(std::vector<std::vector<double>> columns);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }

    double at(std::size_t i, std::size_t j) const { return cols_[j][i]; }
    const double* col(std::size_t j) const { return cols_[j].data(); }
    const std::vector<double>& column(std::size_t j) const { return cols_[j]; }

    Point point(std::size_t i) const {
        Point p(d_);
        for (std::size_t j = 0; j < d_; ++j) p[j] = cols_[j][i];
        return p;
    }

    std::vector<Point> points() const {
        std::vector<Point> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = point(i);
        return out;
    }

  private:
    Dataset() = default;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::vector<double>> cols_;
};

/// Rectangular evaluation grid, nx columns by ny rows.
struct GridSpec {
    double x_min, x_max, y_min, y_max;
    std::size_t nx, ny;

    /// Throws GridSpecError unless x_min < x_max, y_min < y_max, nx,ny >= 2.
    void validate() const;

    double x_at(std::size_t ix) const {
        return x_min + (x_max - x_min) * static_cast<double>(ix) / static_cast<double>(nx - 1);
    }
    double y_at(std::size_t iy) const {
        return y_min + (y_max - y_min) * static_cast<double>(iy) / static_cast<double>(ny - 1);
    }
};

inline void check_finite(const Point& p, const char* what) {
    for (double v : p)
        if (!std::isfinite(v)) throw ValueError(std::string(what) + ": non-finite coordinate");
}

}  // namespace depthlab
