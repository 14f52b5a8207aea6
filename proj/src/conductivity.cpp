#include "scsigma/conductivity.hpp"

#include "scsigma/bcs.hpp"
#include "scsigma/constants.hpp"
#include "scsigma/errors.hpp"
#include "scsigma/numerics.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace scsigma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuadAbsFloor = 1e-300; // keeps all-underflow integrals terminating

void require_positive_omega(double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("angular frequency must be positive");
    }
}

// Shared setup for the Mattis-Bardeen kernels. Throws on the pair-breaking
// branch hw >= 2*Delta(T) whenever the gap is open.
struct MbContext {
    double delta;  // Delta(T) [J]
    double delta0; // Delta(0) [J]
    double hw;     // photon energy [J]
    double kt;     // k_B T [J]; 0 at T = 0
};

MbContext mb_setup(double omega, double temperature, const Material &m) {
    validate_material(m);
    require_positive_omega(omega);
    if (temperature < 0.0) {
        throw DomainError("temperature must be non-negative");
    }
    const bcs::GapSolution g = bcs::gap(temperature, m);
    const double hw = constants::hbar * omega;
    if (g.delta > 0.0 && hw >= 2.0 * g.delta) {
        throw DomainError("photon energy reaches the pair-breaking threshold 2*Delta; "
                          "this branch is not implemented");
    }
    return MbContext{g.delta, g.delta0, hw, constants::k_b * temperature};
}

// 1 - 2 f(E) = tanh(E/(2 k_B T)); weight 1 in the T = 0 limit.
double sigma2_thermal_weight(double energy, double kt) {
    if (kt == 0.0) {
        return 1.0;
    }
    return std::tanh(0.5 * energy / kt);
}

// sigma1 integrand after E = Delta*cosh(u); the 1/sqrt(E^2-Delta^2) factor
// cancels against the Jacobian. e_minus_delta is carried separately
// (= 2*Delta*sinh^2(u/2)) so the near-edge square root keeps full precision.
double mb_sigma1_integrand_u(const MbContext &c, double temperature, double u) {
    const double sh = std::sinh(0.5 * u);
    const double e_minus_delta = 2.0 * c.delta * sh * sh;
    const double e = c.delta + e_minus_delta;
    const double fd = bcs::fermi_difference(e, c.hw, temperature);
    if (fd == 0.0) {
        return 0.0;
    }
    const double coherence = e * e + c.delta * c.delta + c.hw * e;
    const double edge2 = std::sqrt((c.hw + e_minus_delta) * (e + c.hw + c.delta));
    return fd * coherence / edge2;
}

// sigma1 integrand in E for the non-singular tail E >= Delta*cosh(1).
double mb_sigma1_integrand_e(const MbContext &c, double temperature, double e) {
    const double fd = bcs::fermi_difference(e, c.hw, temperature);
    if (fd == 0.0) {
        return 0.0;
    }
    const double coherence = e * e + c.delta * c.delta + c.hw * e;
    const double root1 = std::sqrt((e - c.delta) * (e + c.delta));
    const double root2 = std::sqrt((e + c.hw - c.delta) * (e + c.hw + c.delta));
    return fd * coherence / (root1 * root2);
}

// Dynes-broadened density and anomalous factors
//   N = Re[z/sqrt(z^2-Delta^2)],  P = Re[Delta/sqrt(z^2-Delta^2)],
// z = E + i*Gamma. e_minus_delta is passed separately to keep the radicand
// accurate near the gap edge.
struct DynesFactors {
    double n;
    double p;
};

DynesFactors dynes_factors(double e, double e_minus_delta, double delta, double gamma) {
    const std::complex<double> radicand(e_minus_delta * (e + delta) - gamma * gamma,
                                        2.0 * e * gamma);
    const std::complex<double> w = std::sqrt(radicand);
    const std::complex<double> z(e, gamma);
    const std::complex<double> inv_w = 1.0 / w;
    return DynesFactors{(z * inv_w).real(), (delta * inv_w).real()};
}

double dynes_integrand(const MbContext &c, double temperature, double gamma, double e,
                       double e_minus_delta) {
    const double fd = bcs::fermi_difference(e, c.hw, temperature);
    if (fd == 0.0) {
        return 0.0;
    }
    const DynesFactors a = dynes_factors(e, e_minus_delta, c.delta, gamma);
    const DynesFactors b = dynes_factors(e + c.hw, e_minus_delta + c.hw, c.delta, gamma);
    return fd * (a.n * b.n + a.p * b.p);
}

} // namespace

ComplexConductivity two_fluid_sigma(const Depths &depths, double omega) {
    require_positive_omega(omega);
    if (!(depths.skin_depth > 0.0) || !(depths.london_depth > 0.0)) {
        throw DomainError("depths must be positive");
    }
    const double wmu = omega * constants::mu0;
    const double sigma1 =
        std::isinf(depths.skin_depth) ? 0.0 : 2.0 / (wmu * depths.skin_depth * depths.skin_depth);
    const double sigma2 = std::isinf(depths.london_depth)
                              ? 0.0
                              : 1.0 / (wmu * depths.london_depth * depths.london_depth);
    return ComplexConductivity{sigma1, sigma2};
}

Depths depths_from_sigma(const ComplexConductivity &sigma, double omega) {
    require_positive_omega(omega);
    if (sigma.sigma1 < 0.0 || sigma.sigma2 < 0.0) {
        throw DomainError("conductivity components must be non-negative");
    }
    const double wmu = omega * constants::mu0;
    const double skin = sigma.sigma1 == 0.0 ? kInf : std::sqrt(2.0 / (wmu * sigma.sigma1));
    const double london = sigma.sigma2 == 0.0 ? kInf : std::sqrt(1.0 / (wmu * sigma.sigma2));
    return Depths{skin, london};
}

ComplexConductivity gorter_casimir_sigma(double temperature, const Material &m, double omega) {
    validate_material(m);
    require_positive_omega(omega);
    if (temperature < 0.0 || temperature > m.tc) {
        throw DomainError("Gorter-Casimir laws are defined for 0 <= T <= T_c");
    }
    const double t = temperature / m.tc;
    const double t4 = t * t * t * t;
    const double sigma2_zero = 1.0 / (omega * constants::mu0 * m.lambda_l0 * m.lambda_l0);
    return ComplexConductivity{t4 * m.sigma_n, (1.0 - t4) * sigma2_zero};
}

double mb_sigma1_ratio(double omega, double temperature, const Material &m, double rel_tol) {
    const MbContext c = mb_setup(omega, temperature, m);
    if (c.delta == 0.0) {
        return 1.0; // gap closed: normal state
    }
    if (temperature == 0.0) {
        return 0.0; // no thermally excited quasiparticles
    }

    const double e_split = c.delta * std::cosh(1.0);
    const auto head = numerics::integrate_adaptive(
        [&](double u) { return mb_sigma1_integrand_u(c, temperature, u); }, 0.0, 1.0, rel_tol,
        kQuadAbsFloor);
    const auto tail = numerics::integrate_semi_infinite(
        [&](double e) { return mb_sigma1_integrand_e(c, temperature, e); }, e_split, c.kt, rel_tol,
        kQuadAbsFloor);
    return 2.0 / c.hw * (head.value + tail.value);
}

double mb_sigma2_ratio(double omega, double temperature, const Material &m, double rel_tol) {
    const MbContext c = mb_setup(omega, temperature, m);
    if (c.delta == 0.0) {
        return 0.0; // no superfluid response in this model
    }

    // E runs over [Delta-hw, Delta]; u^2 measures the distance to the singular
    // endpoint on each half of the interval.
    const double u_max = std::sqrt(0.5 * c.hw);
    const double delta = c.delta;
    const double hw = c.hw;

    auto lower_half = [&](double u) { // E = Delta - hw + u^2
        const double u2 = u * u;
        const double e = delta - hw + u2;
        const double w = sigma2_thermal_weight(e + hw, c.kt);
        const double coherence = e * e + delta * delta + hw * e;
        const double root1 = std::sqrt((hw - u2) * (2.0 * delta - hw + u2));
        const double root2 = std::sqrt(2.0 * delta + u2);
        return 2.0 * w * coherence / (root1 * root2);
    };
    auto upper_half = [&](double u) { // E = Delta - u^2
        const double u2 = u * u;
        const double e = delta - u2;
        const double w = sigma2_thermal_weight(e + hw, c.kt);
        const double coherence = e * e + delta * delta + hw * e;
        const double root1 = std::sqrt(2.0 * delta - u2);
        const double root2 = std::sqrt((hw - u2) * (2.0 * delta + hw - u2));
        return 2.0 * w * coherence / (root1 * root2);
    };

    const auto lower = numerics::integrate_adaptive(lower_half, 0.0, u_max, rel_tol, kQuadAbsFloor);
    const auto upper = numerics::integrate_adaptive(upper_half, 0.0, u_max, rel_tol, kQuadAbsFloor);
    return (lower.value + upper.value) / c.hw;
}

double dynes_sigma1_ratio(double omega, double temperature, const Material &m, double rel_tol) {
    validate_material(m);
    if (m.dynes_gamma_ratio == 0.0) {
        return mb_sigma1_ratio(omega, temperature, m, rel_tol);
    }
    const MbContext c = mb_setup(omega, temperature, m);
    if (c.delta == 0.0) {
        return 1.0;
    }
    if (temperature == 0.0) {
        return 0.0;
    }
    const double gamma = m.dynes_gamma_ratio * c.delta0;
    const double delta = c.delta;

    // Sub-gap part, E = Delta - v^2: resolution concentrates at the smeared
    // gap edge where the broadened density of states peaks.
    const auto subgap = numerics::integrate_adaptive(
        [&](double v) {
            const double v2 = v * v;
            return dynes_integrand(c, temperature, gamma, delta - v2, -v2) * 2.0 * v;
        },
        0.0, std::sqrt(delta), rel_tol, kQuadAbsFloor);

    // Above-gap head, E = Delta*cosh(u), plus the smooth exponential tail.
    const auto head = numerics::integrate_adaptive(
        [&](double u) {
            const double sh = std::sinh(0.5 * u);
            const double e_minus_delta = 2.0 * delta * sh * sh;
            const double jacobian = delta * std::sinh(u);
            return dynes_integrand(c, temperature, gamma, delta + e_minus_delta, e_minus_delta) *
                   jacobian;
        },
        0.0, 1.0, rel_tol, kQuadAbsFloor);
    const auto tail = numerics::integrate_semi_infinite(
        [&](double e) { return dynes_integrand(c, temperature, gamma, e, e - delta); },
        delta * std::cosh(1.0), c.kt, rel_tol, kQuadAbsFloor);

    return 2.0 / c.hw * (subgap.value + head.value + tail.value);
}

ComplexConductivity conductivity(ModelKind model, double temperature, double omega,
                                 const Material &m, Sigma2Normalization norm, double rel_tol) {
    if (model == ModelKind::GorterCasimir) {
        return gorter_casimir_sigma(temperature, m, omega);
    }
    const double r1 = model == ModelKind::MattisBardeenDynes
                          ? dynes_sigma1_ratio(omega, temperature, m, rel_tol)
                          : mb_sigma1_ratio(omega, temperature, m, rel_tol);
    const double r2 = mb_sigma2_ratio(omega, temperature, m, rel_tol);
    double sigma2 = r2 * m.sigma_n;
    if (norm == Sigma2Normalization::MatchLambda0 && sigma2 != 0.0) {
        const double target = 1.0 / (omega * constants::mu0 * m.lambda_l0 * m.lambda_l0);
        const double base = mb_sigma2_ratio(omega, 0.0, m, rel_tol) * m.sigma_n;
        sigma2 *= target / base;
    }
    return ComplexConductivity{r1 * m.sigma_n, sigma2};
}

} // namespace scsigma
