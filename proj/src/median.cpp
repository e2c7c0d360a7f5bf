// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/median.hpp"

#include <algorithm>
#include <cmath>

#include "depthlab/rng.hpp"

namespace depthlab {

namespace {

double quantile_sorted(const std::vector<double>& s, double q) {
    // type-7 linear interpolation
    double pos = q * static_cast<double>(s.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, s.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return s[lo] + frac * (s[hi] - s[lo]);
}

DepthResult certified_depth(const Dataset& data, const Point& p, std::uint64_t seed,
                            const MedianOptions& opt) {
    if (auto exact = depth_exact_auto(data, p)) return *exact;
    return depth_approx(data, p, opt.approx_dirs, seed);
}

}  // namespace

Point coordinatewise_median(const Dataset& data) {
    Point med(data.dim());
    for (std::size_t j = 0; j < data.dim(); ++j) {
        std::vector<double> col = data.column(j);
        std::sort(col.begin(), col.end());
        std::size_t n = col.size();
        med[j] = (n % 2 == 1) ? col[n / 2] : 0.5 * (col[n / 2 - 1] + col[n / 2]);
    }
    return med;
}

MedianResult tukey_median(const Dataset& data, std::uint64_t seed, const MedianOptions& opt) {
    const std::size_t n = data.size();
    const std::size_t d = data.dim();

    std::vector<Point> candidates;
    candidates.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(data.point(i));
    candidates.push_back(coordinatewise_median(data));
    {
        Point mean(d, 0.0);
        for (std::size_t j = 0; j < d; ++j) {
            const double* c = data.col(j);
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += c[i];
            mean[j] = s / static_cast<double>(n);
        }
        candidates.push_back(std::move(mean));
    }

    std::uint64_t evaluated = 0;
    std::size_t best_idx = 0;
    DepthResult best = certified_depth(data, candidates[0], seed, opt);
    ++evaluated;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        DepthResult r = certified_depth(data, candidates[i], seed, opt);
        ++evaluated;
        if (r.count > best.count) {  // ties keep the first candidate
            best = r;
            best_idx = i;
        }
    }
    Point current = candidates[best_idx];

    // Per-coordinate perturbation scale: IQR, falling back to the half-range
    // for coordinates with collapsed quartiles.
    Point scale(d, 0.0);
    bool any_scale = false;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<double> col = data.column(j);
        std::sort(col.begin(), col.end());
        double iqr = quantile_sorted(col, 0.75) - quantile_sorted(col, 0.25);
        if (iqr <= 0.0) iqr = 0.5 * (col.back() - col.front());
        scale[j] = iqr;
        if (iqr > 0.0) any_scale = true;
    }

    if (any_scale && best.count < best.n) {
        Rng rng = Rng::substream(seed, stream_tag::median_refine);
        double factor = 1.0;
        for (std::size_t t = 0; t < opt.refine_rounds; ++t) {
            Point prop(d);
            for (std::size_t j = 0; j < d; ++j)
                prop[j] = current[j] + factor * scale[j] * rng.gaussian();
            DepthResult r = certified_depth(data, prop, seed, opt);
            ++evaluated;
            if (r.count > best.count) {
                best = r;
                current = std::move(prop);
            }
            factor *= opt.shrink;
        }
    }

    return {std::move(current), std::move(best), evaluated};
}

DepthResult max_depth(const Dataset& data, std::uint64_t seed, const MedianOptions& opt) {
    return tukey_median(data, seed, opt).depth;
}

}  // namespace depthlab
