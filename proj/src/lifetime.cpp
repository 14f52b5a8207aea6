#include "scsigma/lifetime.hpp"

#include "scsigma/errors.hpp"
#include "scsigma/numerics.hpp"

#include <cmath>

namespace scsigma {

namespace {
constexpr double kRegimeFactor = 100.0; // sigma2 >= 100*sigma1 marks lambda_L << delta
}

LifetimeProxy lifetime_proxy(const ComplexConductivity &sigma) {
    if (!(sigma.sigma1 > 0.0)) {
        throw DomainError("lifetime proxy requires sigma1 > 0");
    }
    if (sigma.sigma2 < 0.0) {
        throw DomainError("lifetime proxy requires sigma2 >= 0");
    }
    const double value = sigma.sigma2 * std::sqrt(sigma.sigma2) / sigma.sigma1;
    return LifetimeProxy{value, sigma.sigma2 >= kRegimeFactor * sigma.sigma1};
}

LifetimeRatio lifetime_ratio(ModelKind model, double t1, double t2, double omega,
                             const Material &m, Sigma2Normalization norm) {
    const LifetimeProxy p1 = lifetime_proxy(conductivity(model, t1, omega, m, norm));
    const LifetimeProxy p2 = lifetime_proxy(conductivity(model, t2, omega, m, norm));
    return LifetimeRatio{p1.value / p2.value, p1.regime_valid && p2.regime_valid};
}

PeakReport coherence_peak(const Material &m, double omega, double gamma_ratio) {
    validate_material(m);
    if (!(omega > 0.0)) {
        throw DomainError("coherence_peak requires omega > 0");
    }
    if (gamma_ratio < 0.0) {
        throw DomainError("coherence_peak requires gamma_ratio >= 0");
    }
    Material probe = m;
    probe.dynes_gamma_ratio = gamma_ratio;
    auto height_at = [&](double t) {
        const double temperature = t * probe.tc;
        return gamma_ratio > 0.0 ? dynes_sigma1_ratio(omega, temperature, probe)
                                 : mb_sigma1_ratio(omega, temperature, probe);
    };
    const auto peak = numerics::maximize_scalar(height_at, 0.02, 0.999, 1e-4);
    return PeakReport{peak.x_star, peak.f_star, gamma_ratio};
}

double sigma1_model_discrepancy(const Material &m, double omega) {
    validate_material(m);
    if (!(omega > 0.0)) {
        throw DomainError("sigma1_model_discrepancy requires omega > 0");
    }
    auto ratio_at = [&](double t) {
        const double t4 = t * t * t * t;
        return mb_sigma1_ratio(omega, t * m.tc, m) / t4;
    };
    const auto peak = numerics::maximize_scalar(ratio_at, 0.05, 0.999, 1e-4, 201);
    return peak.f_star;
}

} // namespace scsigma
