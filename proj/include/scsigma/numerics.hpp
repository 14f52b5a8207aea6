#pragma once

#include <cstddef>
#include <functional>

namespace scsigma::numerics {

using ScalarFn = std::function<double(double)>;

struct QuadratureResult {
    double value;
    double error_estimate;
    std::size_t evaluations;
};

struct ScalarMaximum {
    double x_star;
    double f_star;
};

/// Adaptive quadrature of f over (a, b) with a 15-point open (Gauss-Kronrod)
/// rule. Endpoints are never evaluated, so integrands with up to
/// inverse-square-root endpoint singularities are handled. Stops when the
/// accumulated error estimate falls below max(abs_tol, rel_tol*|value|);
/// throws ConvergenceError once max_evaluations is exhausted.
QuadratureResult integrate_adaptive(const ScalarFn &f, double a, double b, double rel_tol = 1e-8,
                                    double abs_tol = 1e-12, std::size_t max_evaluations = 1000000);

/// Integrates f over [a, inf) for integrands decaying at least exponentially
/// on decay_scale, via the map u = (x-a)/(x-a+decay_scale) and
/// integrate_adaptive on (0, 1).
QuadratureResult integrate_semi_infinite(const ScalarFn &f, double a, double decay_scale,
                                         double rel_tol = 1e-8, double abs_tol = 1e-12,
                                         std::size_t max_evaluations = 1000000);

/// Pure bisection on [lo, hi]; requires f(lo)*f(hi) <= 0. Returns x with
/// |x - root| <= x_tol. Deterministic, no heuristics.
double bisect_root(const ScalarFn &f, double lo, double hi, double x_tol);

/// Coarse grid scan (grid_points samples including both endpoints) followed
/// by golden-section refinement around the best grid point. Returns the best
/// evaluated point, so f_star is exactly f(x_star).
ScalarMaximum maximize_scalar(const ScalarFn &f, double lo, double hi, double x_tol,
                              int grid_points = 200);

} // namespace scsigma::numerics
