#pragma once

#include <numbers>

namespace scsigma::constants {

/// μ₀ — vacuum permeability [H/m].
inline constexpr double mu0 = 4.0 * std::numbers::pi * 1.0e-7;

/// ħ — reduced Planck constant [J·s] (CODATA 2018).
inline constexpr double hbar = 1.054571817e-34;

/// k_B — Boltzmann constant [J/K] (exact, SI 2019).
inline constexpr double k_b = 1.380649e-23;

inline constexpr double pi = std::numbers::pi;

} // namespace scsigma::constants
