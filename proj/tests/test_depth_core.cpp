// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "depthlab/depth.hpp"
#include "depthlab/rng.hpp"
#include "oracles.hpp"

using namespace depthlab;
using depthlab::testing::brute_depth_count_2d;
using depthlab::testing::direction_scan_count;
using depthlab::testing::random_gaussian_dataset;
using depthlab::testing::random_uniform_dataset;
using Catch::Approx;

namespace {

Dataset square_corners() {
    return Dataset({{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}});
}

std::uint64_t closed_count_along(const Dataset& data, const Point& x, const Point& u) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        double t = 0.0;
        for (std::size_t j = 0; j < data.dim(); ++j) t += u[j] * (data.at(i, j) - x[j]);
        if (t >= 0.0) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("univariate depth", "[depth]") {
    Dataset data({{1.0}, {2.0}, {3.0}, {4.0}});
    REQUIRE(depth_1d(data, 2.5).value == 0.5);
    REQUIRE(depth_1d(data, 0.0).value == 0.0);

    // enumerate both closed half-lines at x = 2: {<=2} has 2, {>=2} has 2
    Dataset odd({{1.0}, {2.0}, {3.0}});
    DepthResult r = depth_1d(odd, 2.0);
    REQUIRE(r.count == 2);
    REQUIRE(r.n == 3);
    REQUIRE_FALSE(r.witness.has_value());

    Dataset bivariate({{0.0, 0.0}});
    REQUIRE_THROWS_AS(depth_1d(bivariate, 0.0), DimensionMismatchError);
}

TEST_CASE("exact 2-D depth on the square corners", "[depth]") {
    Dataset data = square_corners();
    DepthResult center = depth_2d_exact(data, {0.0, 0.0});
    REQUIRE(center.count == 2);
    REQUIRE(center.value == 0.5);
    REQUIRE(brute_depth_count_2d(data, {0.0, 0.0}) == 2);

    DepthResult corner = depth_2d_exact(data, {1.0, 1.0});
    REQUIRE(corner.count == 1);
    REQUIRE(corner.value == 0.25);
    REQUIRE(brute_depth_count_2d(data, {1.0, 1.0}) == 1);

    Dataset single({{0.0, 0.0}});
    REQUIRE(depth_2d_exact(single, {0.0, 0.0}).value == 1.0);

    REQUIRE_THROWS_AS(depth_2d_exact(Dataset(std::vector<Point>{{1.0}}), {0.0, 0.0}), DimensionMismatchError);
}

TEST_CASE("witness direction attains the reported minimum", "[depth]") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        Dataset data = random_gaussian_dataset(25, 2, seed);
        Point x{0.3, -0.2};
        DepthResult r = depth_2d_exact(data, x);
        REQUIRE(r.witness.has_value());
        double norm = std::hypot((*r.witness)[0], (*r.witness)[1]);
        REQUIRE(norm == Approx(1.0).margin(1e-12));
        REQUIRE(closed_count_along(data, x, *r.witness) == r.count);

        DepthResult c = depth_exact_combinatorial(data, x);
        REQUIRE(c.witness.has_value());
        REQUIRE(closed_count_along(data, x, *c.witness) == c.count);
    }
}

TEST_CASE("combinatorial method equals the sweep and the brute force", "[depth]") {
    // seeded random instances; includes query-on-data-point cases
    std::size_t instances = 0;
    for (std::uint64_t seed = 1; instances < 200; ++seed) {
        Rng rng(seed * 977);
        std::size_t n = 1 + rng.next_u64() % 30;
        Dataset data = random_gaussian_dataset(n, 2, seed);
        Point x;
        if (seed % 5 == 0)
            x = data.point(rng.next_u64() % n);
        else if (seed % 7 == 0)
            x = {rng.uniform(2.0, 4.0), rng.uniform(2.0, 4.0)};  // usually outside the hull
        else
            x = {rng.gaussian(), rng.gaussian()};
        DepthResult sweep = depth_2d_exact(data, x);
        DepthResult comb = depth_exact_combinatorial(data, x);
        std::uint64_t brute = brute_depth_count_2d(data, x);
        CAPTURE(seed, n, x[0], x[1]);
        REQUIRE(sweep.count == brute);
        REQUIRE(comb.count == brute);
        REQUIRE(sweep.n == comb.n);
        ++instances;
    }
}

TEST_CASE("method equivalence on tied/degenerate configurations", "[depth]") {
    // duplicates, antipodal pairs, collinear runs: ties must resolve identically
    Dataset data({{1.0, 1.0}, {1.0, 1.0}, {-1.0, -1.0}, {2.0, 2.0}, {0.0, 1.0},
                  {0.0, -1.0}, {3.0, 0.0}, {-3.0, 0.0}, {0.0, 0.0}});
    for (const Point& x : std::vector<Point>{{0.0, 0.0}, {1.0, 1.0}, {0.5, 0.5}, {2.0, 2.0},
                                             {-1.0, -1.0}, {0.0, 1.0}, {5.0, 5.0}}) {
        CAPTURE(x[0], x[1]);
        std::uint64_t brute = brute_depth_count_2d(data, x);
        REQUIRE(depth_2d_exact(data, x).count == brute);
        REQUIRE(depth_exact_combinatorial(data, x).count == brute);
    }
}

TEST_CASE("combinatorial depth in three and four dimensions", "[depth]") {
    // +-e_i in d = 3: every direction u keeps one of each antipodal pair
    // (both on ties), so the exact count is 3; the direction scan agrees.
    std::vector<Point> pts;
    for (std::size_t j = 0; j < 3; ++j) {
        Point p(3, 0.0), m(3, 0.0);
        p[j] = 1.0;
        m[j] = -1.0;
        pts.push_back(p);
        pts.push_back(m);
    }
    Dataset data(pts);
    Point origin(3, 0.0);
    DepthResult r = depth_exact_combinatorial(data, origin);
    REQUIRE(r.count == 3);
    REQUIRE(r.value == 0.5);
    REQUIRE(direction_scan_count(data, origin, 2000, 5) == 3);

    // random d = 3 and d = 4 instances against the direction-scan upper bound
    for (std::uint64_t seed : {3u, 4u, 5u}) {
        for (std::size_t d : {3u, 4u}) {
            Dataset rd = random_gaussian_dataset(18, d, seed + d);
            Point x(d, 0.1);
            DepthResult c = depth_exact_combinatorial(rd, x);
            std::uint64_t scan = direction_scan_count(rd, x, 4000, seed);
            REQUIRE(c.count <= scan);  // exact <= any scanned direction
            REQUIRE(closed_count_along(rd, x, *c.witness) == c.count);
        }
    }
}

TEST_CASE("combinatorial guards", "[depth]") {
    Dataset big = random_gaussian_dataset(61, 2, 1);
    REQUIRE_THROWS_AS(depth_exact_combinatorial(big, {0.0, 0.0}), SizeLimitError);
    Dataset wide = random_gaussian_dataset(10, 5, 1);
    REQUIRE_THROWS_AS(depth_exact_combinatorial(wide, Point(5, 0.0)), SizeLimitError);
    // degenerate all-coincident data
    Dataset same({{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}});
    REQUIRE(depth_exact_combinatorial(same, {1.0, 2.0, 3.0}).value == 1.0);
    REQUIRE(depth_exact_combinatorial(same, {0.0, 0.0, 0.0}).value == 0.0);
}

TEST_CASE("approximate depth dominates the exact depth", "[depth]") {
    Dataset square = square_corners();
    DepthResult one = depth_approx(square, {0.0, 0.0}, 1, 42);
    REQUIRE(one.witness.has_value());
    REQUIRE(closed_count_along(square, {0.0, 0.0}, *one.witness) == one.count);

    DepthResult many = depth_approx(square, {0.0, 0.0}, 1000, 1);
    REQUIRE(many.value == 0.5);  // exact depth 0.5 and every direction sees >= 2 of 4

    for (std::uint64_t seed : {7u, 8u, 9u}) {
        Dataset data = random_gaussian_dataset(40, 2, seed);
        Point x{0.1, 0.2};
        std::uint64_t exact = depth_2d_exact(data, x).count;
        for (std::size_t dirs : {1u, 10u, 100u}) {
            REQUIRE(depth_approx(data, x, dirs, seed).count >= exact);
        }
    }

    Dataset g50 = random_gaussian_dataset(50, 2, 123);
    Point x{0.0, 0.0};
    double exact = depth_2d_exact(g50, x).value;
    double approx = depth_approx(g50, x, 5000, 9).value;
    REQUIRE(approx >= exact);
    REQUIRE(approx - exact <= 1.0 / 50.0);
}

TEST_CASE("approximate depth is monotone in nested direction sets", "[depth]") {
    Dataset data = random_gaussian_dataset(30, 3, 77);
    Point x{0.2, -0.1, 0.4};
    std::uint64_t prev = data.size();
    for (std::size_t k = 1; k <= 4; ++k) {
        std::size_t dirs = 1;
        for (std::size_t i = 0; i < k; ++i) dirs *= 10;
        std::uint64_t c = depth_approx(data, x, dirs, 314).count;
        REQUIRE(c <= prev);
        prev = c;
    }
}

TEST_CASE("depth range and outside-hull zero", "[depth]") {
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        Dataset data = random_uniform_dataset(35, 2, seed);
        // data lives in [-1,1]^2; these points are strictly outside the hull
        for (const Point& x : std::vector<Point>{{2.0, 0.0}, {0.0, -2.0}, {3.0, 3.0}}) {
            REQUIRE(depth_2d_exact(data, x).count == 0);
        }
        for (std::size_t i = 0; i < 5; ++i) {
            Point x = data.point(i);
            DepthResult r = depth_2d_exact(data, x);
            REQUIRE(r.value >= 0.0);
            REQUIRE(r.value <= 1.0);
            REQUIRE(r.count >= 1);  // the point itself is in every closed half-plane
        }
    }
}

TEST_CASE("exact depth is affine invariant", "[depth]") {
    Rng rng(555);
    for (int rep = 0; rep < 50; ++rep) {
        std::size_t n = 5 + rng.next_u64() % 36;  // n <= 40
        Dataset data = random_gaussian_dataset(n, 2, 1000 + rep);
        Point x{rng.gaussian(), rng.gaussian()};

        // A = rotation * diag(s1, s2) * rotation, condition number <= 1e3
        double th1 = rng.uniform(0.0, 6.283), th2 = rng.uniform(0.0, 6.283);
        double s1 = rng.uniform(0.1, 10.0);
        double s2 = s1 / rng.uniform(1.0, 1000.0 / 10.0);
        double c1 = std::cos(th1), s1r = std::sin(th1), c2 = std::cos(th2), s2r = std::sin(th2);
        double a11 = c1 * s1 * c2 - s1r * s2 * s2r, a12 = -c1 * s1 * s2r - s1r * s2 * c2;
        double a21 = s1r * s1 * c2 + c1 * s2 * s2r, a22 = -s1r * s1 * s2r + c1 * s2 * c2;
        double bx = rng.gaussian(), by = rng.gaussian();

        std::vector<Point> mapped;
        for (std::size_t i = 0; i < n; ++i) {
            double px = data.at(i, 0), py = data.at(i, 1);
            mapped.push_back({a11 * px + a12 * py + bx, a21 * px + a22 * py + by});
        }
        Dataset mdata(mapped);
        Point mx{a11 * x[0] + a12 * x[1] + bx, a21 * x[0] + a22 * x[1] + by};

        CAPTURE(rep, n);
        REQUIRE(depth_2d_exact(data, x).count == depth_2d_exact(mdata, mx).count);
    }
}

TEST_CASE("depth grid", "[depth]") {
    Dataset data = square_corners();
    GridSpec g{-1.0, 1.0, -1.0, 1.0, 2, 2};
    std::vector<double> v = depth_grid(data, g);
    REQUIRE(v.size() == 4);
    for (std::size_t iy = 0; iy < 2; ++iy)
        for (std::size_t ix = 0; ix < 2; ++ix)
            REQUIRE(v[iy * 2 + ix] ==
                    depth_2d_exact(data, {g.x_at(ix), g.y_at(iy)}).value);

    GridSpec outside{5.0, 6.0, 5.0, 6.0, 3, 3};
    for (double val : depth_grid(data, outside)) REQUIRE(val == 0.0);

    GridSpec bad{0.0, 1.0, 0.0, 1.0, 1, 5};
    REQUIRE_THROWS_AS(depth_grid(data, bad), GridSpecError);
    REQUIRE_THROWS_AS(depth_grid(Dataset(std::vector<Point>{{1.0}}), g), DimensionMismatchError);
}

TEST_CASE("exact methods return rational counts", "[depth]") {
    for (std::uint64_t seed : {31u, 32u}) {
        Dataset data = random_gaussian_dataset(23, 2, seed);
        Point x{0.0, 0.0};
        for (const DepthResult& r : {depth_2d_exact(data, x), depth_exact_combinatorial(data, x)}) {
            REQUIRE(r.n == 23);
            REQUIRE(r.value == static_cast<double>(r.count) / 23.0);
        }
    }
}
