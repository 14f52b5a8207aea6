#pragma once

#include "scsigma/conductivity.hpp"
#include "scsigma/types.hpp"

namespace scsigma {

/// Spin-lifetime proxy sigma2^(3/2)/sigma1 in (S/m)^(1/2). The library never
/// produces absolute lifetimes; every output is this proxy or a ratio of two
/// of them. regime_valid marks the screening regime sigma2 >= 100*sigma1
/// (equivalently lambda_L/delta <= 0.07) where the proxy scaling applies.
struct LifetimeProxy {
    double value;
    bool regime_valid;
};

struct LifetimeRatio {
    double value;
    bool regime_valid; // both endpoints in the valid regime
};

struct PeakReport {
    double t_peak;      // reduced temperature T/T_c of the sigma1 maximum
    double height;      // peak sigma1/sigma_n
    double gamma_ratio; // Gamma/Delta(0) used
};

/// Proxy from one conductivity sample; requires sigma1 > 0. sigma2 = 0 gives
/// value 0 with regime_valid false.
LifetimeProxy lifetime_proxy(const ComplexConductivity &sigma);

/// proxy(T1)/proxy(T2) under the chosen model.
LifetimeRatio lifetime_ratio(ModelKind model, double t1, double t2, double omega,
                             const Material &m, Sigma2Normalization norm);

/// Locates the coherence peak of sigma1(T)/sigma_n over T/T_c in
/// [0.02, 0.999] (200-point scan + golden refinement, x_tol 1e-4).
/// gamma_ratio = 0 uses the plain Mattis-Bardeen kernel.
PeakReport coherence_peak(const Material &m, double omega, double gamma_ratio);

/// Max over T/T_c in [0.05, 0.999] (201-point grid + golden refinement) of
/// the Mattis-Bardeen/Gorter-Casimir sigma1 ratio mb_sigma1_ratio(t)/t^4,
/// bounding the multiplicative correction to the lifetime proxy at fixed
/// sigma2.
double sigma1_model_discrepancy(const Material &m, double omega);

} // namespace scsigma
