#pragma once

#include "scsigma/errors.hpp"

namespace scsigma {

/// Superconductor parameters. All values SI; temperatures absolute kelvin.
struct Material {
    double tc;                      // critical temperature [K]
    double sigma_n;                 // normal-state conductivity at T_c [S/m]
    double lambda_l0;               // zero-temperature London depth [m]
    double delta0_ratio = 1.764;    // Delta(0) / (k_B T_c), weak-coupling BCS default
    double dynes_gamma_ratio = 0.0; // Gamma / Delta(0), quasiparticle broadening
};

/// Complex optical conductivity split into real and imaginary parts [S/m].
/// Both components are non-negative for every model in this library.
struct ComplexConductivity {
    double sigma1;
    double sigma2;
};

/// Skin depth and London penetration depth [m]. A vanishing conductivity
/// component maps to an infinite depth.
struct Depths {
    double skin_depth;
    double london_depth;
};

/// Returns the material unchanged if all invariants hold, otherwise throws
/// DomainError naming the first violated field.
const Material &validate_material(const Material &m);

} // namespace scsigma
