// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/lp_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "depthlab/numerics.hpp"
#include "depthlab/rng.hpp"

namespace depthlab {

namespace {

// exp(-t^p) < 1e-12 beyond this radius; integrand tails are negligible there.
double truncation_radius(double p) { return std::pow(12.0 * std::log(10.0), 1.0 / p); }

void validate(const LpSymmetricModel& m) {
    if (m.d < 1) throw DomainError("lp model: dimension must be >= 1");
    if (!(m.p > 0.0)) throw DomainError("lp model: p must be positive");
}

}  // namespace

LpSymmetricModel LpSymmetricModel::generalized_gaussian(double p, std::size_t d) {
    LpSymmetricModel m{p, d};
    validate(m);
    if (m.is_cube()) throw DomainError("lp model: use hypercube() for p = inf");
    return m;
}

LpSymmetricModel LpSymmetricModel::hypercube(std::size_t d) {
    LpSymmetricModel m{std::numeric_limits<double>::infinity(), d};
    validate(m);
    return m;
}

bool LpSymmetricModel::is_cube() const { return std::isinf(p); }

double LpSymmetricModel::coord_norm_const() const {
    return p / (2.0 * std::tgamma(1.0 / p));
}

double LpSymmetricModel::marginal_density(double t) const {
    if (is_cube()) return std::fabs(t) <= 1.0 ? 0.5 : 0.0;
    return coord_norm_const() * std::exp(-std::pow(std::fabs(t), p));
}

double LpSymmetricModel::marginal_tail(double t) const {
    if (is_cube()) {
        if (t <= -1.0) return 1.0;
        if (t >= 1.0) return 0.0;
        return (1.0 - t) / 2.0;
    }
    if (t >= 0.0) return 0.5 * gamma_q(1.0 / p, std::pow(t, p));
    return 1.0 - 0.5 * gamma_q(1.0 / p, std::pow(-t, p));
}

double density(const LpSymmetricModel& model, const Point& x) {
    validate(model);
    if (x.size() != model.d) throw DimensionMismatchError("density: dimension mismatch");
    if (model.is_cube()) {
        for (double v : x)
            if (std::fabs(v) > 1.0) return 0.0;
        return std::pow(0.5, static_cast<double>(model.d));
    }
    double s = 0.0;
    for (double v : x) s += std::pow(std::fabs(v), model.p);
    return std::pow(model.coord_norm_const(), static_cast<double>(model.d)) * std::exp(-s);
}

Dataset sample(const LpSymmetricModel& model, std::size_t n, std::uint64_t seed) {
    validate(model);
    if (n < 1) throw EmptyInputError("sample: n must be >= 1");
    Rng rng = Rng::substream(seed, stream_tag::sampler);
    std::vector<std::vector<double>> cols(model.d, std::vector<double>(n));
    if (model.is_cube()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < model.d; ++j) cols[j][i] = rng.uniform(-1.0, 1.0);
    } else {
        const double inv_p = 1.0 / model.p;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < model.d; ++j) {
                double g = rng.gamma(inv_p);
                cols[j][i] = rng.rademacher() * std::pow(g, inv_p);
            }
    }
    return Dataset::from_columns(std::move(cols));
}

double axis_tail(const LpSymmetricModel& model, double x) {
    validate(model);
    if (x < 0.0) throw DomainError("axis_tail: x must be >= 0 (use symmetry)");
    if (model.is_cube()) return std::clamp((1.0 - x) / 2.0, 0.0, 0.5);
    return model.marginal_tail(x);
}

double axis_depth_oracle(const LpSymmetricModel& model, double x) {
    return axis_tail(model, std::fabs(x));
}

double diagonal_depth_oracle(const LpSymmetricModel& model, double c) {
    validate(model);
    if (model.is_cube() || model.p < 1.0)
        throw DomainError("diagonal_depth_oracle: requires 1 <= p < inf");
    if (model.d < 2) throw DomainError("diagonal_depth_oracle: requires d >= 2");
    if (!(c > 0.0)) throw DomainError("diagonal_depth_oracle: c must be positive");
    const double R = truncation_radius(model.p);
    // P(X1 + X2 >= 2c) = Int g(t) * P(X2 >= 2c - t) dt; the inner factor is
    // the closed-form marginal tail.
    auto f = [&](double t) { return model.marginal_density(t) * model.marginal_tail(2.0 * c - t); };
    return integrate_split(f, -R, R, {0.0, 2.0 * c - R, 2.0 * c, 2.0 * c + R}, 1e-8);
}

double cube_sum_tail(const LpSymmetricModel& model, double x) {
    validate(model);
    if (!model.is_cube()) throw DomainError("cube_sum_tail: hypercube model only");
    if (model.d < 2) throw DomainError("cube_sum_tail: requires d >= 2");
    if (!(x > 0.0)) throw DomainError("cube_sum_tail: x must be positive");
    if (x >= 1.0) return 0.0;
    // {x1 + x2 >= 2x} meets [-1,1]^2 in a right triangle with legs 2(1-x).
    return 0.5 * (1.0 - x) * (1.0 - x);
}

double lemma4_discrepancy(double p, const std::vector<double>& grid) {
    if (!(p >= 1.0) || std::isinf(p)) throw DomainError("lemma4_discrepancy: requires 1 <= p < inf");
    LpSymmetricModel m = LpSymmetricModel::generalized_gaussian(p, 2);
    const double R = truncation_radius(p);
    const double alpha = (1.0 - p) / p;
    const double scale = std::pow(2.0, -alpha);  // Y = 2^alpha * S  =>  f_Y(y) = scale * f_S(scale*y)

    auto density_of_sum = [&](double s) {
        auto f = [&](double t) { return m.marginal_density(t) * m.marginal_density(s - t); };
        double lo = std::max(-R, s - R), hi = std::min(R, s + R);
        if (lo >= hi) return 0.0;
        return integrate_split(f, lo, hi, {0.0, s}, 1e-9);
    };

    double worst = 0.0;
    for (double t : grid) {
        double f_x1 = m.marginal_density(t);
        double f_y = scale * density_of_sum(scale * t);
        worst = std::max(worst, std::fabs(f_x1 - f_y));
    }
    return worst;
}

double axis_point_at_depth(const LpSymmetricModel& model, double depth_value) {
    validate(model);
    if (!(depth_value > 0.0) || depth_value > 0.5)
        throw DomainError("axis_point_at_depth: depth must be in (0, 0.5]");
    double lo = 0.0;
    double hi = model.is_cube() ? 1.0 : truncation_radius(model.p) + 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (axis_tail(model, mid) >= depth_value ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace depthlab
