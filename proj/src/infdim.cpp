// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/infdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "depthlab/rng.hpp"

namespace depthlab {

SequenceModel SequenceModel::inverse_square() { return {Profile::inverse_square, {}}; }

SequenceModel SequenceModel::geometric() { return {Profile::geometric, {}}; }

SequenceModel SequenceModel::custom(std::vector<double> sigma2) {
    for (double s : sigma2)
        if (!(s > 0.0) || !std::isfinite(s))
            throw DomainError("sequence model: variances must be positive and finite");
    return {Profile::custom, std::move(sigma2)};
}

double SequenceModel::sigma2(std::size_t i) const {
    if (i < 1) throw DomainError("sequence model: index is 1-based");
    switch (profile) {
        case Profile::inverse_square: {
            double di = static_cast<double>(i);
            return 1.0 / (di * di);
        }
        case Profile::geometric:
            return std::pow(2.0, -static_cast<double>(i));
        case Profile::custom:
            if (i > custom_sigma2.size())
                throw DomainError("sequence model: custom profile has no index " + std::to_string(i));
            return custom_sigma2[i - 1];
    }
    throw DomainError("sequence model: bad profile");
}

BoundResult depth_upper_bound(const SequenceModel& model, const std::vector<double>& x,
                              std::size_t d_trunc) {
    if (d_trunc < 1) throw DomainError("depth_upper_bound: d_trunc must be >= 1");
    if (x.size() < d_trunc) throw DomainError("depth_upper_bound: x shorter than d_trunc");
    double s = 0.0;
    for (std::size_t i = 1; i <= d_trunc; ++i) s += x[i - 1] * x[i - 1] / model.sigma2(i);
    BoundResult r;
    if (s == 0.0) {
        r.raw = std::numeric_limits<double>::infinity();
        r.bound = 1.0;
        r.clipped = true;
        return r;
    }
    r.raw = 1.0 / s;
    r.clipped = r.raw > 1.0;
    r.bound = r.clipped ? 1.0 : r.raw;
    return r;
}

bool verify_optimal_alpha(const SequenceModel& model, const std::vector<double>& x,
                          std::size_t d_trunc, std::size_t n_random_alpha, std::uint64_t seed) {
    if (n_random_alpha < 1) throw DomainError("verify_optimal_alpha: need at least one draw");
    BoundResult b = depth_upper_bound(model, x, d_trunc);
    if (std::isinf(b.raw)) return true;  // vacuous bound; every ratio exceeds it

    for (std::size_t k = 0; k < n_random_alpha; ++k) {
        Rng rng = Rng::substream(seed, stream_tag::alpha_probe, k);
        double num = 0.0, den = 0.0;
        int attempts = 0;
        do {
            num = den = 0.0;
            for (std::size_t i = 1; i <= d_trunc; ++i) {
                double a = rng.gaussian();
                num += a * a * model.sigma2(i);
                den += a * x[i - 1];
            }
            if (++attempts > 100) throw DomainError("verify_optimal_alpha: degenerate draws");
        } while (den == 0.0);
        double ratio = num / (den * den);
        if (ratio < b.raw - 1e-10 * std::max(1.0, b.raw)) return false;
    }
    return true;
}

std::vector<double> sample_sequence(const SequenceModel& model, std::size_t d_max,
                                    std::uint64_t seed, std::uint64_t draw_index) {
    Rng rng = Rng::substream(seed, stream_tag::sequence_draw, draw_index);
    std::vector<double> x(d_max);
    for (std::size_t i = 1; i <= d_max; ++i) x[i - 1] = std::sqrt(model.sigma2(i)) * rng.gaussian();
    return x;
}

DecayTable decay_experiment(const SequenceModel& model, std::size_t n_draws,
                            const std::vector<std::size_t>& d_grid, std::uint64_t seed) {
    if (n_draws < 1) throw DomainError("decay_experiment: need at least one draw");
    if (d_grid.empty()) throw DomainError("decay_experiment: empty d grid");
    for (std::size_t i = 0; i < d_grid.size(); ++i) {
        if (d_grid[i] < 1) throw DomainError("decay_experiment: d values must be >= 1");
        if (i > 0 && d_grid[i] <= d_grid[i - 1])
            throw DomainError("decay_experiment: d grid must be increasing");
    }
    const std::size_t d_max = d_grid.back();

    DecayTable table;
    table.d_grid = d_grid;
    table.bounds.assign(n_draws, std::vector<double>(d_grid.size()));
    for (std::size_t k = 0; k < n_draws; ++k) {
        std::vector<double> x = sample_sequence(model, d_max, seed, k);
        double s = 0.0;
        std::size_t gi = 0;
        for (std::size_t i = 1; i <= d_max && gi < d_grid.size(); ++i) {
            s += x[i - 1] * x[i - 1] / model.sigma2(i);
            while (gi < d_grid.size() && d_grid[gi] == i) {
                table.bounds[k][gi] = s == 0.0 ? 1.0 : std::min(1.0, 1.0 / s);
                ++gi;
            }
        }
    }

    table.median_bound.resize(d_grid.size());
    table.max_bound.resize(d_grid.size());
    for (std::size_t gi = 0; gi < d_grid.size(); ++gi) {
        std::vector<double> col(n_draws);
        for (std::size_t k = 0; k < n_draws; ++k) col[k] = table.bounds[k][gi];
        std::sort(col.begin(), col.end());
        table.median_bound[gi] = (n_draws % 2 == 1)
                                     ? col[n_draws / 2]
                                     : 0.5 * (col[n_draws / 2 - 1] + col[n_draws / 2]);
        table.max_bound[gi] = col.back();
    }
    return table;
}

}  // namespace depthlab
