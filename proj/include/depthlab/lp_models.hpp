// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "depthlab/dataset.hpp"

namespace depthlab {

/// The l_p-symmetric model family: product-form generalized Gaussian density
/// C^d * exp(-(|x_1|^p + ... + |x_d|^p)) for finite p, with C = p/(2*Gamma(1/p)),
/// and the uniform distribution on [-1,1]^d for p = infinity. Coordinates are
/// independent in both cases, which is what makes the closed-form tail and
/// oracle computations below possible.
struct LpSymmetricModel {
    double p;       ///< in (0, inf]; std::numeric_limits<double>::infinity() for the hypercube
    std::size_t d;  ///< dimension >= 1

    static LpSymmetricModel generalized_gaussian(double p, std::size_t d);
    static LpSymmetricModel hypercube(std::size_t d);

    bool is_cube() const;
    /// Per-coordinate normalization constant p/(2*Gamma(1/p)); finite p only.
    double coord_norm_const() const;
    /// Marginal density of one coordinate at t.
    double marginal_density(double t) const;
    /// Marginal upper tail P(X >= t) of one coordinate, any real t.
    double marginal_tail(double t) const;
};

/// Joint density at x (dimension must match the model).
double density(const LpSymmetricModel& model, const Point& x);

/// n i.i.d. draws; finite p samples sign * Gamma(1/p)^(1/p) per coordinate.
Dataset sample(const LpSymmetricModel& model, std::size_t n, std::uint64_t seed);

/// P(X_1 >= x) for x >= 0. Closed form: Q(1/p, x^p)/2 for finite p,
/// (1-x)/2 clipped to [0, 1/2] for the hypercube.
double axis_tail(const LpSymmetricModel& model, double x);

/// Population half-space depth of the axis point (x, 0, ..., 0); equals the
/// marginal tail at |x|.
double axis_depth_oracle(const LpSymmetricModel& model, double x);

/// Population half-space depth of the diagonal point (c, c, 0, ..., 0) for
/// 1 <= p < infinity and c > 0: P(X_1 + X_2 >= 2c), by quadrature of the
/// product density to absolute tolerance ~1e-7.
double diagonal_depth_oracle(const LpSymmetricModel& model, double c);

/// P(X_1 + X_2 >= 2x) for the hypercube model, exact area: (1-x)^2/2 on
/// 0 < x < 1, zero for x >= 1.
double cube_sum_tail(const LpSymmetricModel& model, double x);

/// sup over the grid of |f_{X1}(t) - f_Y(t)| with Y = 2^((1-p)/p) (X1 + X2);
/// zero exactly when p = 2. Densities by convolution quadrature.
double lemma4_discrepancy(double p, const std::vector<double>& grid);

/// Inverse of axis_tail on [0, inf): the x >= 0 whose axis depth equals the
/// given value in (0, 0.5]. Used to pair density contours with depth levels.
double axis_point_at_depth(const LpSymmetricModel& model, double depth_value);

}  // namespace depthlab
