// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "depthlab/kernels.hpp"
#include "depthlab/parallel.hpp"

namespace depthlab {

std::vector<std::size_t> depth_ordering(const Dataset& data, const DepthPolicy& policy) {
    const std::size_t n = data.size();
    std::vector<std::uint64_t> counts(n);
    const bool exact = data.dim() <= 2 || (data.dim() <= kCombinatorialMaxDim && n <= kCombinatorialMaxN);
    parallel_for(0, n, [&](std::size_t i) {
        Point p = data.point(i);
        if (exact)
            counts[i] = depth_exact_auto(data, p)->count;
        else
            counts[i] = depth_approx(data, p, policy.approx_dirs, policy.seed).count;
    });
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });
    return order;
}

std::vector<Point> central_hull(const Dataset& data, double q, const DepthPolicy& policy) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("central_hull: q must be in (0,1)");
    std::vector<std::size_t> order = depth_ordering(data, policy);
    std::size_t k = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(data.size())));
    if (k < 1) k = 1;
    std::vector<Point> hull;
    hull.reserve(k);
    for (std::size_t i = 0; i < k; ++i) hull.push_back(data.point(order[i]));
    return hull;
}

namespace {

// Minimal ball with all support points on its boundary: the circumball
// within their affine hull. Solved from 2 (q_j - q_0) . (c - q_0) = |q_j - q_0|^2
// by Gaussian elimination with partial pivoting (at most 4x4); nearly
// dependent rows are dropped.
Ball ball_through(const std::vector<Point>& support, std::size_t d) {
    Ball b;
    b.center.assign(d, 0.0);
    if (support.empty()) {
        b.radius = -1.0;  // contains nothing
        return b;
    }
    b.center = support[0];
    b.radius = 0.0;
    const std::size_t k = support.size() - 1;
    if (k == 0) return b;

    std::vector<std::vector<double>> v(k, std::vector<double>(d));
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) v[i][j] = support[i + 1][j] - support[0][j];
    double scale = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double nn = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            double g = 0.0;
            for (std::size_t j = 0; j < d; ++j) g += v[i][j] * v[l][j];
            a[i][l] = 2.0 * g;
            if (i == l) nn = g;
        }
        a[i][k] = nn;  // |v_i|^2
        scale = std::max(scale, std::fabs(nn));
    }

    std::vector<double> lambda(k, 0.0);
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < k; ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank + 1; r < k; ++r)
            if (std::fabs(a[rows[r]][col]) > std::fabs(a[rows[piv]][col])) piv = r;
        if (std::fabs(a[rows[piv]][col]) <= 1e-12 * std::max(1.0, scale)) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = rank + 1; r < k; ++r) {
            double f = a[rows[r]][col] / a[rows[rank]][col];
            for (std::size_t cc = col; cc <= k; ++cc) a[rows[r]][cc] -= f * a[rows[rank]][cc];
        }
        ++rank;
    }
    // back substitution over the pivoted triangle
    for (std::size_t r = rank; r-- > 0;) {
        std::size_t col = 0;
        while (col < k && std::fabs(a[rows[r]][col]) <= 1e-12 * std::max(1.0, scale)) ++col;
        if (col == k) continue;
        double s = a[rows[r]][k];
        for (std::size_t cc = col + 1; cc < k; ++cc) s -= a[rows[r]][cc] * lambda[cc];
        lambda[col] = s / a[rows[r]][col];
    }

    for (std::size_t j = 0; j < d; ++j) {
        double c = support[0][j];
        for (std::size_t i = 0; i < k; ++i) c += lambda[i] * v[i][j];
        b.center[j] = c;
    }
    double r2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        double t = b.center[j] - support[0][j];
        r2 += t * t;
    }
    b.radius = std::sqrt(r2);
    return b;
}

bool inside(const Ball& b, const Point& p, std::size_t d) {
    if (b.radius < 0.0) return false;
    double r2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        double t = p[j] - b.center[j];
        r2 += t * t;
    }
    return r2 <= b.radius * b.radius * (1.0 + 1e-10) + 1e-30;
}

Ball welzl(std::vector<Point>& pts, std::size_t end, std::vector<Point>& support, std::size_t d) {
    Ball b = ball_through(support, d);
    if (support.size() == d + 1) return b;
    for (std::size_t i = 0; i < end; ++i) {
        if (!inside(b, pts[i], d)) {
            support.push_back(pts[i]);
            b = welzl(pts, i, support, d);
            support.pop_back();
            // move-to-front: keep frequent boundary points early
            Point p = pts[i];
            for (std::size_t r = i; r > 0; --r) pts[r] = pts[r - 1];
            pts[0] = std::move(p);
        }
    }
    return b;
}

}  // namespace

Ball smallest_enclosing_ball(const std::vector<Point>& points) {
    if (points.empty()) throw EmptyInputError("smallest_enclosing_ball: no points");
    const std::size_t d = points.front().size();
    if (d < 1 || d > 4) throw SizeLimitError("smallest_enclosing_ball: supports 1 <= d <= 4");
    for (const Point& p : points) {
        if (p.size() != d) throw DimensionMismatchError("smallest_enclosing_ball: mixed dimensions");
        check_finite(p, "smallest_enclosing_ball");
    }
    std::vector<Point> pts = points;
    std::vector<Point> support;
    support.reserve(d + 1);
    return welzl(pts, pts.size(), support, d);
}

SphericityCurve sphericity_curve(const Dataset& data, const std::vector<double>& q_grid,
                                 const DepthPolicy& policy) {
    if (q_grid.empty()) throw DomainError("sphericity_curve: empty q grid");
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (!(q_grid[i] > 0.0 && q_grid[i] < 1.0))
            throw DomainError("sphericity_curve: q values must lie in (0,1)");
        if (i > 0 && !(q_grid[i] > q_grid[i - 1]))
            throw DomainError("sphericity_curve: q grid must be strictly increasing");
    }
    const std::size_t n = data.size();
    const std::size_t d = data.dim();
    std::vector<std::size_t> order = depth_ordering(data, policy);

    std::vector<const double*> cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = data.col(j);

    SphericityCurve curve;
    curve.q_grid = q_grid;
    curve.r_values.resize(q_grid.size());
    for (std::size_t gi = 0; gi < q_grid.size(); ++gi) {
        std::size_t k = static_cast<std::size_t>(std::ceil(q_grid[gi] * static_cast<double>(n)));
        if (k < 1) k = 1;
        if (k > n) k = n;
        std::vector<Point> hull;
        hull.reserve(k);
        for (std::size_t i = 0; i < k; ++i) hull.push_back(data.point(order[i]));
        Ball ball = smallest_enclosing_ball(hull);
        double r_eff = ball.radius * (1.0 + 1e-9);
        std::size_t members =
            kernels::count_within_r2(cols.data(), d, n, ball.center.data(), r_eff * r_eff + 1e-300);
        curve.r_values[gi] = static_cast<double>(members) / static_cast<double>(n);
    }

    double area = 0.0;
    for (std::size_t gi = 0; gi + 1 < q_grid.size(); ++gi) {
        double f0 = std::fabs(curve.r_values[gi] - q_grid[gi]);
        double f1 = std::fabs(curve.r_values[gi + 1] - q_grid[gi + 1]);
        area += 0.5 * (f0 + f1) * (q_grid[gi + 1] - q_grid[gi]);
    }
    curve.area_deviation = area;
    return curve;
}

}  // namespace depthlab
