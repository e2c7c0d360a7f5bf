// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/depth.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numeric>

#include "depthlab/kernels.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/rng.hpp"

namespace depthlab {

std::string to_string(DepthMethod m) {
    switch (m) {
        case DepthMethod::exact1d: return "exact1d";
        case DepthMethod::exact2d: return "exact2d";
        case DepthMethod::exact_combinatorial: return "exactcombinatorial";
        case DepthMethod::approx: return "approx";
    }
    return "?";
}

namespace {

void require_dim(const Dataset& data, const Point& x) {
    if (x.size() != data.dim())
        throw DimensionMismatchError("depth: query has dimension " + std::to_string(x.size()) +
                                     ", data has " + std::to_string(data.dim()));
    check_finite(x, "depth query");
}

DepthResult make_result(std::uint64_t count, std::uint64_t n, DepthMethod m,
                        std::optional<Point> witness = std::nullopt) {
    DepthResult r;
    r.count = count;
    r.n = n;
    r.value = static_cast<double>(count) / static_cast<double>(n);
    r.method = m;
    r.witness = std::move(witness);
    return r;
}

}  // namespace

DepthResult depth_1d(const Dataset& data, double x) {
    if (data.dim() != 1) throw DimensionMismatchError("depth_1d: data must be univariate");
    if (!std::isfinite(x)) throw ValueError("depth_1d: non-finite query");
    const double* v = data.col(0);
    std::uint64_t le = 0, ge = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (v[i] <= x) ++le;
        if (v[i] >= x) ++ge;
    }
    return make_result(std::min(le, ge), data.size(), DepthMethod::exact1d);
}

// ---------------------------------------------------------------------------
// Exact 2-D depth: rotate a directed line through the query and track how
// many points the closed half-plane {y : <u, y> >= 0} holds. Each non-
// coincident point q is "active" while the normal u lies in the closed
// half-circle centered on q's direction; the count function is piecewise
// constant between arc endpoints and its minimum is attained strictly
// between events, so we only evaluate the open cells.
//
// All orientation predicates are product comparisons of the centered
// coordinates (never atan2), so duplicate and exactly-antipodal points land
// in the same event group and get processed atomically.
// ---------------------------------------------------------------------------

namespace {

struct Vec2 {
    double x, y;
};

// 0 for the upper half (y > 0, or y == 0 and x > 0), 1 for the lower.
inline int half_of(const Vec2& v) { return (v.y > 0.0 || (v.y == 0.0 && v.x > 0.0)) ? 0 : 1; }

inline double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Strict counterclockwise order starting at the +x axis.
inline bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0.0;
}

inline bool angle_equal(const Vec2& a, const Vec2& b) {
    return half_of(a) == half_of(b) && cross2(a, b) == 0.0;
}

struct Event {
    Vec2 dir;
    bool open;
};

}  // namespace

DepthResult depth_2d_exact(const Dataset& data, const Point& x) {
    if (data.dim() != 2) throw DimensionMismatchError("depth_2d_exact: data must be bivariate");
    require_dim(data, x);
    const std::size_t n = data.size();
    const double* xs = data.col(0);
    const double* ys = data.col(1);

    std::vector<double> qx(n), qy(n);
    std::uint64_t zeros = 0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = xs[i] - x[0];
        double b = ys[i] - x[1];
        if (a == 0.0 && b == 0.0) {
            ++zeros;
        } else {
            qx[m] = a;
            qy[m] = b;
            ++m;
        }
    }
    if (m == 0) return make_result(n, n, DepthMethod::exact2d, Point{1.0, 0.0});

    std::vector<Event> events;
    events.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        events.push_back({{qy[i], -qx[i]}, true});   // normal enters q's half-circle
        events.push_back({{-qy[i], qx[i]}, false});  // and leaves a half-turn later
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return angle_less(a.dir, b.dir); });

    // Group events at equal angles.
    std::vector<std::size_t> group_start;
    std::vector<std::size_t> n_open, n_close;
    for (std::size_t i = 0; i < events.size();) {
        std::size_t j = i;
        std::size_t op = 0, cl = 0;
        while (j < events.size() && angle_equal(events[i].dir, events[j].dir)) {
            events[j].open ? ++op : ++cl;
            ++j;
        }
        group_start.push_back(i);
        n_open.push_back(op);
        n_close.push_back(cl);
        i = j;
    }
    const std::size_t ngroups = group_start.size();

    // Closed count at the first event angle, by direct evaluation.
    const Vec2 u0 = events[group_start[0]].dir;
    std::size_t c_at =
        kernels::count_nonneg_2d(qx.data(), qy.data(), m, u0.x, u0.y);

    std::size_t c_after = c_at - n_close[0];
    std::size_t best = c_after;
    std::size_t best_cell = 0;
    for (std::size_t g = 1; g < ngroups; ++g) {
        c_at = c_after + n_open[g];
        c_after = c_at - n_close[g];
        if (c_after < best) {
            best = c_after;
            best_cell = g;
        }
    }
    // Circular consistency: the cell after the last group is the cell just
    // before the first event.
    assert(c_after + n_open[0] ==
           kernels::count_nonneg_2d(qx.data(), qy.data(), m, u0.x, u0.y));

    // Witness: a direction strictly inside the best cell.
    const Vec2 ea = events[group_start[best_cell]].dir;
    const Vec2 eb = events[group_start[(best_cell + 1) % ngroups]].dir;
    double a0 = std::atan2(ea.y, ea.x);
    double a1 = std::atan2(eb.y, eb.x);
    double gap = a1 - a0;
    const double two_pi = 6.283185307179586476925286766559;
    while (gap <= 0.0) gap += two_pi;
    std::optional<Point> witness;
    for (double frac : {0.5, 0.25, 0.75, 0.125, 0.875}) {
        double ang = a0 + gap * frac;
        Point w{std::cos(ang), std::sin(ang)};
        if (kernels::count_nonneg_2d(qx.data(), qy.data(), m, w[0], w[1]) == best) {
            witness = std::move(w);
            break;
        }
    }
    if (!witness) {
        double norm = std::hypot(ea.x, ea.y);
        witness = Point{ea.x / norm, ea.y / norm};
    }
    return make_result(zeros + best, n, DepthMethod::exact2d, std::move(witness));
}

// ---------------------------------------------------------------------------
// Combinatorial exact depth for d <= 4. mincount() minimizes, over unit u,
// the number of vectors with <u, q> >= 0. Candidate normals are orthogonal
// complements of (d-1)-subsets; vectors falling on a candidate hyperplane are
// re-minimized recursively inside that hyperplane, which is exactly the
// effect of an infinitesimal rotation of u.
// ---------------------------------------------------------------------------

namespace {

using VecK = std::vector<double>;

double dot_k(const VecK& a, const VecK& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

double norm_k(const VecK& a) { return std::sqrt(dot_k(a, a)); }

// Orthonormal basis of span(vs) by modified Gram-Schmidt; vectors whose
// residual drops below rel_tol of their original norm are dependent.
std::vector<VecK> orthonormal_span(const std::vector<const VecK*>& vs, double rel_tol) {
    std::vector<VecK> basis;
    for (const VecK* pv : vs) {
        VecK r = *pv;
        double n0 = norm_k(r);
        if (n0 == 0.0) continue;
        for (const VecK& b : basis) {
            double c = dot_k(r, b);
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * b[j];
        }
        double n1 = norm_k(r);
        if (n1 <= rel_tol * n0) continue;
        for (double& v : r) v /= n1;
        basis.push_back(std::move(r));
    }
    return basis;
}

// Unit vector orthogonal to all basis vectors (basis size == k-1, so the
// complement is a line). Picks the coordinate axis with the largest residual.
std::optional<VecK> orthogonal_complement_dir(const std::vector<VecK>& basis, std::size_t k) {
    VecK best;
    double best_norm = 0.0;
    for (std::size_t axis = 0; axis < k; ++axis) {
        VecK r(k, 0.0);
        r[axis] = 1.0;
        for (const VecK& b : basis) {
            double c = dot_k(r, b);
            for (std::size_t j = 0; j < k; ++j) r[j] -= c * b[j];
        }
        double nr = norm_k(r);
        if (nr > best_norm) {
            best_norm = nr;
            best = std::move(r);
        }
    }
    if (best_norm <= 1e-12) return std::nullopt;
    for (double& v : best) v /= best_norm;
    return best;
}

struct MinCountResult {
    std::size_t count;
    VecK witness;  // unit direction in the local k-dim frame
};

std::size_t closed_count(const VecK& u, const std::vector<VecK>& qs) {
    std::size_t c = 0;
    for (const VecK& q : qs)
        if (dot_k(u, q) >= 0.0) ++c;
    return c;
}

MinCountResult mincount(const std::vector<VecK>& qs_in, std::size_t k);

// Tries to realize `sub` (a direction within the hyperplane frame W) as a
// concrete perturbation of v that attains strict + sub_count.
VecK compose_witness(const VecK& v, const std::vector<VecK>& w_frame, const VecK& sub,
                     const std::vector<VecK>& qs, std::size_t want) {
    VecK shift(v.size(), 0.0);
    for (std::size_t b = 0; b < w_frame.size(); ++b)
        for (std::size_t j = 0; j < v.size(); ++j) shift[j] += sub[b] * w_frame[b][j];
    // The right scale depends on how deep the tie recursion went below us, so
    // probe a ladder and keep the first verified realization.
    for (double delta : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-8, 1e-10, 1e-12}) {
        VecK w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j] + delta * shift[j];
        double nw = norm_k(w);
        if (nw == 0.0) continue;
        for (double& c : w) c /= nw;
        if (closed_count(w, qs) == want) return w;
    }
    return v;  // depth value is still exact; the witness is merely on a tie
}

MinCountResult mincount(const std::vector<VecK>& qs_in, std::size_t k) {
    std::size_t zeros = 0;
    std::vector<VecK> qs;
    qs.reserve(qs_in.size());
    for (const VecK& q : qs_in) {
        bool all_zero = true;
        for (double v : q)
            if (v != 0.0) {
                all_zero = false;
                break;
            }
        if (all_zero)
            ++zeros;
        else
            qs.push_back(q);
    }

    VecK e1(k, 0.0);
    e1[0] = 1.0;
    if (qs.empty()) return {zeros, e1};

    if (k == 1) {
        std::size_t pos = 0, neg = 0;
        for (const VecK& q : qs) (q[0] > 0.0 ? pos : neg)++;
        if (pos <= neg) return {zeros + pos, VecK{1.0}};
        return {zeros + neg, VecK{-1.0}};
    }

    // Rank reduction: if the vectors span a proper subspace, the problem
    // lives entirely inside it.
    std::vector<const VecK*> ptrs;
    for (const VecK& q : qs) ptrs.push_back(&q);
    std::vector<VecK> span = orthonormal_span(ptrs, 1e-12);
    if (span.size() < k) {
        std::size_t r = span.size();
        std::vector<VecK> proj(qs.size(), VecK(r));
        for (std::size_t i = 0; i < qs.size(); ++i)
            for (std::size_t b = 0; b < r; ++b) proj[i][b] = dot_k(qs[i], span[b]);
        MinCountResult sub = mincount(proj, r);
        VecK w(k, 0.0);
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t j = 0; j < k; ++j) w[j] += sub.witness[b] * span[b][j];
        return {zeros + sub.count, w};
    }

    const std::size_t m = qs.size();
    const std::size_t pick = k - 1;
    std::vector<std::size_t> idx(pick);
    for (std::size_t j = 0; j < pick; ++j) idx[j] = j;

    std::size_t best = qs.size() + 1;
    VecK best_witness = e1;

    auto consider = [&](const std::vector<std::size_t>& subset) {
        std::vector<const VecK*> sel;
        for (std::size_t i : subset) sel.push_back(&qs[i]);
        std::vector<VecK> frame = orthonormal_span(sel, 1e-12);
        if (frame.size() != pick) return;  // degenerate subset; covered elsewhere
        std::optional<VecK> u = orthogonal_complement_dir(frame, k);
        if (!u) return;
        for (int s : {1, -1}) {
            VecK v(k);
            for (std::size_t j = 0; j < k; ++j) v[j] = s * (*u)[j];
            std::size_t strict = 0;
            std::vector<VecK> boundary;
            for (const VecK& q : qs) {
                double t = dot_k(v, q);
                if (std::fabs(t) <= 1e-9 * norm_k(q)) {
                    VecK w(pick);
                    for (std::size_t b = 0; b < pick; ++b) w[b] = dot_k(frame[b], q);
                    boundary.push_back(std::move(w));
                } else if (t > 0.0) {
                    ++strict;
                }
            }
            MinCountResult sub = mincount(boundary, pick);
            std::size_t total = strict + sub.count;
            if (total < best) {
                best = total;
                best_witness = compose_witness(v, frame, sub.witness, qs, total);
            }
        }
    };

    if (pick == 0) {
        // k == 1 handled above; unreachable.
    } else if (m < pick) {
        // Fewer vectors than pick: rank < k, handled by the reduction above.
    } else {
        for (;;) {
            consider(idx);
            // next combination
            std::size_t j = pick;
            while (j > 0) {
                --j;
                if (idx[j] != j + m - pick) {
                    ++idx[j];
                    for (std::size_t l = j + 1; l < pick; ++l) idx[l] = idx[l - 1] + 1;
                    break;
                }
                if (j == 0) {
                    j = pick + 1;  // done marker
                    break;
                }
            }
            if (j == pick + 1) break;
        }
    }

    return {zeros + best, best_witness};
}

}  // namespace

DepthResult depth_exact_combinatorial(const Dataset& data, const Point& x) {
    require_dim(data, x);
    const std::size_t d = data.dim();
    const std::size_t n = data.size();
    if (d > kCombinatorialMaxDim)
        throw SizeLimitError("depth_exact_combinatorial: dimension " + std::to_string(d) +
                             " exceeds limit " + std::to_string(kCombinatorialMaxDim));
    if (n > kCombinatorialMaxN)
        throw SizeLimitError("depth_exact_combinatorial: n = " + std::to_string(n) +
                             " exceeds limit " + std::to_string(kCombinatorialMaxN));

    std::vector<VecK> qs(n, VecK(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) qs[i][j] = data.at(i, j) - x[j];

    MinCountResult r = mincount(qs, d);
    Point witness(r.witness.begin(), r.witness.end());
    double nw = 0.0;
    for (double v : witness) nw += v * v;
    nw = std::sqrt(nw);
    if (nw > 0.0)
        for (double& v : witness) v /= nw;
    else
        witness[0] = 1.0;
    return make_result(r.count, n, DepthMethod::exact_combinatorial, std::move(witness));
}

DepthResult depth_approx(const Dataset& data, const Point& x, std::size_t n_dirs,
                         std::uint64_t seed) {
    require_dim(data, x);
    if (n_dirs < 1) throw DomainError("depth_approx: need at least one direction");
    const std::size_t n = data.size();
    const std::size_t d = data.dim();

    // Center the data once; each direction is then a single kernel pass.
    std::vector<std::vector<double>> centered(d, std::vector<double>(n));
    std::vector<const double*> cols(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double* c = data.col(j);
        for (std::size_t i = 0; i < n; ++i) centered[j][i] = c[i] - x[j];
        cols[j] = centered[j].data();
    }

    // Direction k depends only on (seed, k): direction sets are nested in
    // n_dirs, which makes the approximation monotone under refinement.
    std::vector<std::vector<double>> dirs(n_dirs, std::vector<double>(d));
    for (std::size_t k = 0; k < n_dirs; ++k) {
        Rng rng = Rng::substream(seed, stream_tag::directions, k);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                dirs[k][j] = rng.gaussian();
                norm += dirs[k][j] * dirs[k][j];
            }
            norm = std::sqrt(norm);
        } while (norm == 0.0);
        for (std::size_t j = 0; j < d; ++j) dirs[k][j] /= norm;
    }

    std::vector<std::size_t> counts(n_dirs);
    parallel_for(0, n_dirs, [&](std::size_t k) {
        counts[k] = kernels::count_nonneg_nd(cols.data(), d, n, dirs[k].data());
    });

    std::size_t best = counts[0], best_k = 0;
    for (std::size_t k = 1; k < n_dirs; ++k)
        if (counts[k] < best) {
            best = counts[k];
            best_k = k;
        }
    return make_result(best, n, DepthMethod::approx, Point(dirs[best_k].begin(), dirs[best_k].end()));
}

std::vector<double> depth_grid(const Dataset& data, const GridSpec& grid) {
    if (data.dim() != 2) throw DimensionMismatchError("depth_grid: data must be bivariate");
    grid.validate();
    std::vector<double> values(grid.nx * grid.ny);
    parallel_for(0, grid.ny, [&](std::size_t iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            Point p{grid.x_at(ix), grid.y_at(iy)};
            values[iy * grid.nx + ix] = depth_2d_exact(data, p).value;
        }
    });
    return values;
}

std::optional<DepthResult> depth_exact_auto(const Dataset& data, const Point& x) {
    if (data.dim() == 1) return depth_1d(data, x[0]);
    if (data.dim() == 2) return depth_2d_exact(data, x);
    if (data.dim() <= kCombinatorialMaxDim && data.size() <= kCombinatorialMaxN)
        return depth_exact_combinatorial(data, x);
    return std::nullopt;
}

}  // namespace depthlab
