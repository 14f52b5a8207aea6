#pragma once

#include "scsigma/types.hpp"

namespace scsigma {

enum class ModelKind {
    GorterCasimir,
    MattisBardeen,
    MattisBardeenDynes,
};

/// How to pin the scale of a Mattis-Bardeen sigma2 curve.
///   None        - use the ratio times sigma_n as computed.
///   MatchLambda0 - rescale sigma2 by the constant that makes the model's
///                  T -> 0 value equal 1/(omega mu0 lambda_L(0)^2).
enum class Sigma2Normalization {
    None,
    MatchLambda0,
};

/// Two-fluid parameterization: sigma1 = 2/(omega mu0 delta^2),
/// sigma2 = 1/(omega mu0 lambda_L^2). Infinite depths map to zero components.
ComplexConductivity two_fluid_sigma(const Depths &depths, double omega);

/// Inverse of two_fluid_sigma: delta = sqrt(2/(mu0 omega sigma1)),
/// lambda_L = sqrt(1/(mu0 omega sigma2)). Zero components map to infinity.
Depths depths_from_sigma(const ComplexConductivity &sigma, double omega);

/// Gorter-Casimir laws for 0 <= T <= T_c:
///   sigma1(T) = (T/T_c)^4 sigma_n
///   sigma2(T) = (1 - (T/T_c)^4) / (omega mu0 lambda_L(0)^2)
ComplexConductivity gorter_casimir_sigma(double temperature, const Material &m, double omega);

/// Dirty-limit Mattis-Bardeen sigma1/sigma_n for hw < 2*Delta(T):
///
///   sigma1/sigma_n = (2/hw) \int_Delta^inf [f(E) - f(E+hw)]
///                    * (E^2 + Delta^2 + hw E)
///                    / (sqrt(E^2-Delta^2) sqrt((E+hw)^2-Delta^2)) dE
///
/// The gap-edge singularity is absorbed with E = Delta*cosh(u); the tail is
/// mapped to a finite interval with decay scale k_B T. Returns exactly 1 for
/// T >= T_c and 0 for T = 0. Throws DomainError when hw >= 2*Delta(T) > 0
/// (pair-breaking branch not implemented).
double mb_sigma1_ratio(double omega, double temperature, const Material &m, double rel_tol = 1e-9);

/// Companion sigma2/sigma_n for hw < 2*Delta(T):
///
///   sigma2/sigma_n = (1/hw) \int_{Delta-hw}^{Delta} [1 - 2 f(E+hw)]
///                    * (E^2 + Delta^2 + hw E)
///                    / (sqrt(Delta^2-E^2) sqrt((E+hw)^2-Delta^2)) dE
///
/// Both endpoint singularities are removed by splitting at the midpoint and
/// substituting u^2 = distance to the singular endpoint on each half.
/// Returns 0 for T >= T_c.
double mb_sigma2_ratio(double omega, double temperature, const Material &m, double rel_tol = 1e-9);

/// Mattis-Bardeen sigma1 with Dynes quasiparticle broadening
/// Gamma = dynes_gamma_ratio * Delta(0): each density factor becomes
/// Re[(E+i Gamma)/sqrt((E+i Gamma)^2-Delta^2)] and the anomalous factor
/// Re[Delta/sqrt((E+i Gamma)^2-Delta^2)], integrated over E in [0, inf).
/// Gamma = 0 reproduces mb_sigma1_ratio.
double dynes_sigma1_ratio(double omega, double temperature, const Material &m,
                          double rel_tol = 1e-9);

/// Model dispatcher. For the Mattis-Bardeen models sigma = ratio * sigma_n;
/// MatchLambda0 then rescales sigma2 as described above.
ComplexConductivity conductivity(ModelKind model, double temperature, double omega,
                                 const Material &m, Sigma2Normalization norm,
                                 double rel_tol = 1e-9);

} // namespace scsigma
