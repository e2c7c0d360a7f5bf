// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/dataset.hpp"

namespace depthlab {

Dataset::Dataset(const std::vector<Point>& points) {
    if (points.empty()) throw EmptyInputError("dataset: no points");
    d_ = points.front().size();
    if (d_ == 0) throw DimensionMismatchError("dataset: zero-dimensional point");
    n_ = points.size();
    cols_.assign(d_, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        const Point& p = points[i];
        if (p.size() != d_)
            throw DimensionMismatchError("dataset: point " + std::to_string(i) + " has dimension " +
                                         std::to_string(p.size()) + ", expected " + std::to_string(d_));
        for (std::size_t j = 0; j < d_; ++j) {
            if (!std::isfinite(p[j])) throw ValueError("dataset: non-finite coordinate");
            cols_[j][i] = p[j];
        }
    }
}

Dataset Dataset::from_columns(std::vector<std::vector<double>> columns) {
    Dataset ds;
    if (columns.empty()) throw DimensionMismatchError("dataset: zero-dimensional");
    ds.d_ = columns.size();
    ds.n_ = columns.front().size();
    if (ds.n_ == 0) throw EmptyInputError("dataset: no points");
    for (const auto& c : columns) {
        if (c.size() != ds.n_) throw DimensionMismatchError("dataset: ragged columns");
        for (double v : c)
            if (!std::isfinite(v)) throw ValueError("dataset: non-finite coordinate");
    }
    ds.cols_ = std::move(columns);
    return ds;
}

void GridSpec::validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) throw GridSpecError("grid: empty extent");
    if (nx < 2 || ny < 2) throw GridSpecError("grid: need at least 2 points per axis");
}

}  // namespace depthlab
