#pragma once

#include "scsigma/types.hpp"

namespace scsigma::bcs {

/// Self-consistent gap at one temperature. delta equals
/// reduced_gap * delta0 exactly; reduced_gap is 0 for T >= T_c.
struct GapSolution {
    double delta;       // Delta(T) [J]
    double delta0;      // Delta(0) [J]
    double reduced_gap; // Delta(T)/Delta(0)
    bool converged;
};

/// Fermi-Dirac occupation 1/(exp(E/kT)+1), overflow-free for |E/kT| up to 1e4.
double fermi_occupation(double energy, double temperature);

/// f(E) - f(E + hw) without catastrophic cancellation. Uses the identity
/// f(x) - f(x+w) = f(x) * f(-(x+w)) * (-expm1(-w)) in the reduced variables
/// x = E/kT, w = hw/kT; accurate to a few ulp even for w ~ 1e-12.
double fermi_difference(double energy, double photon_energy, double temperature);

/// Delta(0) = delta0_ratio * k_B * T_c.
double gap_zero_temperature(const Material &m);

/// Solves the cutoff-free weak-coupling gap equation
///   ln(Delta0/Delta) = 2 \int_0^inf f(sqrt(xi^2+Delta^2)) / sqrt(xi^2+Delta^2) dxi
/// by bisection on the reduced gap in (1e-8, 1]. Temperatures within
/// 1e-6*T_c of T_c are treated as T_c; reduced gaps below 1e-8 snap to 0.
/// Solutions are memoized per (T/T_c, delta0_ratio); the cache is
/// thread-safe.
GapSolution gap(double temperature, const Material &m);

/// Drops all memoized gap solutions (test hook).
void clear_gap_cache();

} // namespace scsigma::bcs
