#include "scsigma/bcs.hpp"

#include "scsigma/constants.hpp"
#include "scsigma/errors.hpp"
#include "scsigma/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace scsigma::bcs {

namespace {

// Occupation in the reduced variable x = E/(k_B T); exp(-|x|) on both
// branches so neither side can overflow.
double fermi_reduced(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    const double e = std::exp(x);
    return 1.0 / (1.0 + e);
}

constexpr double kGapBisectionFloor = 1e-8;
constexpr double kGapBisectionXtol = 1e-10;
constexpr double kTcSnapWindow = 1e-6; // |T - T_c| <= window*T_c counts as T_c

// RHS of the gap equation in reduced variables: a = Delta/(k_B T),
//   I(a) = \int_0^inf dx / (sqrt(x^2+a^2) (exp(sqrt(x^2+a^2)) + 1)).
double gap_equation_rhs(double a) {
    auto integrand = [a](double x) {
        const double e = std::hypot(x, a);
        return 1.0 / (e * (std::exp(e) + 1.0));
    };
    return 2.0 * numerics::integrate_semi_infinite(integrand, 0.0, 1.0, 1e-10, 1e-14).value;
}

double solve_reduced_gap(double t_reduced, double delta0_ratio) {
    auto residual = [&](double d) {
        return std::log(1.0 / d) - gap_equation_rhs(delta0_ratio * d / t_reduced);
    };
    // Even the smallest admissible gap is unsustainable: the gap has closed
    // below T_c (possible when delta0_ratio is below the weak-coupling value).
    if (residual(kGapBisectionFloor) <= 0.0) {
        return 0.0;
    }
    double d = numerics::bisect_root(residual, kGapBisectionFloor, 1.0, kGapBisectionXtol);
    if (d < kGapBisectionFloor * 2.0) {
        d = 0.0;
    }
    return d;
}

std::mutex g_gap_cache_mutex;
std::map<std::pair<double, double>, double> g_gap_cache;

} // namespace

double fermi_occupation(double energy, double temperature) {
    if (!(temperature > 0.0)) {
        throw DomainError("fermi_occupation requires temperature > 0");
    }
    return fermi_reduced(energy / (constants::k_b * temperature));
}

double fermi_difference(double energy, double photon_energy, double temperature) {
    if (!(temperature > 0.0)) {
        throw DomainError("fermi_difference requires temperature > 0");
    }
    if (photon_energy < 0.0) {
        throw DomainError("fermi_difference requires photon_energy >= 0");
    }
    const double beta = 1.0 / (constants::k_b * temperature);
    const double x = beta * energy;
    const double w = beta * photon_energy;
    if (w == 0.0) {
        return 0.0;
    }
    // f(x) - f(x+w) = f(x) * (1 - f(x+w)) * (1 - exp(-w)), all factors positive
    return fermi_reduced(x) * fermi_reduced(-(x + w)) * (-std::expm1(-w));
}

double gap_zero_temperature(const Material &m) {
    validate_material(m);
    return m.delta0_ratio * constants::k_b * m.tc;
}

GapSolution gap(double temperature, const Material &m) {
    validate_material(m);
    if (temperature < 0.0) {
        throw DomainError("gap requires temperature >= 0");
    }
    const double delta0 = m.delta0_ratio * constants::k_b * m.tc;
    const double t_reduced = temperature / m.tc;

    if (t_reduced >= 1.0 - kTcSnapWindow) {
        return GapSolution{0.0, delta0, 0.0, true};
    }
    if (temperature == 0.0) {
        return GapSolution{delta0, delta0, 1.0, true};
    }

    const auto key = std::make_pair(t_reduced, m.delta0_ratio);
    {
        std::lock_guard<std::mutex> lock(g_gap_cache_mutex);
        auto it = g_gap_cache.find(key);
        if (it != g_gap_cache.end()) {
            const double d = it->second;
            return GapSolution{d * delta0, delta0, d, true};
        }
    }

    const double d = solve_reduced_gap(t_reduced, m.delta0_ratio);
    {
        std::lock_guard<std::mutex> lock(g_gap_cache_mutex);
        g_gap_cache.emplace(key, d);
    }
    return GapSolution{d * delta0, delta0, d, true};
}

void clear_gap_cache() {
    std::lock_guard<std::mutex> lock(g_gap_cache_mutex);
    g_gap_cache.clear();
}

} // namespace scsigma::bcs
