// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

namespace depthlab {

/// Regularized lower incomplete gamma P(a, x) = gamma(a,x)/Gamma(a), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// Same, but the interval is pre-split at the given breakpoints (useful when
/// the integrand has kinks at known locations, e.g. |t|^p at t = 0).
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breakpoints, double tol);

}  // namespace depthlab
