#include "doctest.h"

#include "scsigma/bcs.hpp"
#include "scsigma/constants.hpp"
#include "scsigma/errors.hpp"

#include <cmath>
#include <string>

using namespace scsigma;
using namespace scsigma::constants;

namespace {
const Material kNb{9.25, 2e8, 35e-9, 1.764, 0.0};
}

TEST_CASE("material validation") {
    CHECK_NOTHROW(validate_material(kNb));

    Material bad = kNb;
    bad.tc = -1.0;
    CHECK_THROWS_WITH_AS(validate_material(bad), doctest::Contains("tc"), DomainError);

    bad = kNb;
    bad.lambda_l0 = 0.0;
    CHECK_THROWS_WITH_AS(validate_material(bad), doctest::Contains("lambda_l0"), DomainError);

    bad = kNb;
    bad.delta0_ratio = 0.0;
    CHECK_THROWS_AS(validate_material(bad), DomainError);

    SUBCASE("validation is idempotent and returns the value unchanged") {
        const Material &again = validate_material(validate_material(kNb));
        CHECK(again.tc == kNb.tc);
        CHECK(again.sigma_n == kNb.sigma_n);
        CHECK(again.lambda_l0 == kNb.lambda_l0);
        CHECK(again.delta0_ratio == kNb.delta0_ratio);
        CHECK(again.dynes_gamma_ratio == kNb.dynes_gamma_ratio);
    }
}

TEST_CASE("physical constants carry the stated decimal digits") {
    CHECK(mu0 == doctest::Approx(4.0e-7 * pi).epsilon(1e-15));
    CHECK(hbar == 1.054571817e-34);
    CHECK(k_b == 1.380649e-23);
    CHECK(mu0 > 0.0);
    CHECK(hbar > 0.0);
    CHECK(k_b > 0.0);
}

TEST_CASE("fermi occupation") {
    CHECK(bcs::fermi_occupation(0.0, 4.2) == 0.5);

    // E/kT = 1 -> 1/(e+1)
    CHECK(bcs::fermi_occupation(k_b * 4.2, 4.2) ==
          doctest::Approx(0.2689414213699951).epsilon(1e-14));

    SUBCASE("saturates without overflow far into the tail") {
        const double deep = bcs::fermi_occupation(700.0 * k_b * 4.2, 4.2);
        CHECK(deep >= 0.0);
        CHECK(deep <= 1e-300);
        CHECK(std::isfinite(bcs::fermi_occupation(1e4 * k_b * 4.2, 4.2)));
        CHECK(bcs::fermi_occupation(-1e4 * k_b * 4.2, 4.2) == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(bcs::fermi_occupation(1.0e-22, 0.0), DomainError);
    CHECK_THROWS_AS(bcs::fermi_occupation(1.0e-22, -1.0), DomainError);
}

TEST_CASE("fermi difference is cancellation-free") {
    const double t = 1.0;

    SUBCASE("zero photon energy gives exactly zero") {
        CHECK(bcs::fermi_difference(3.0 * k_b, 0.0, t) == 0.0);
    }
    SUBCASE("beta*E = 10, beta*hw = 1e-6 against a 50-digit evaluation") {
        // exp(10)*(exp(1e-6)-1) / ((1+exp(10))*(1+exp(10+1e-6)))
        const double v = bcs::fermi_difference(10.0 * k_b, 1e-6 * k_b, t);
        CHECK(v == doctest::Approx(4.5395785040116240e-11).epsilon(1e-12));
    }
    SUBCASE("beta*E = 0, beta*hw = 2: closed form tanh(1)/2") {
        const double v = bcs::fermi_difference(0.0, 2.0 * k_b, t);
        CHECK(v == doctest::Approx(0.3807970779778824).epsilon(1e-14));
    }
    SUBCASE("agrees with naive subtraction where cancellation is benign") {
        for (double x : {-5.0, -1.0, 0.0, 1.0, 5.0, 20.0}) {
            for (double w : {1e-2, 0.1, 1.0, 5.0}) {
                const double stable = bcs::fermi_difference(x * k_b, w * k_b, t);
                const double naive =
                    bcs::fermi_occupation(x * k_b, t) - bcs::fermi_occupation((x + w) * k_b, t);
                CHECK(stable == doctest::Approx(naive).epsilon(1e-6));
            }
        }
    }
    SUBCASE("non-negative for all energies") {
        for (double x : {-30.0, -2.0, 0.0, 2.0, 30.0, 600.0}) {
            CHECK(bcs::fermi_difference(x * k_b, 1e-8 * k_b, t) >= 0.0);
        }
    }
    CHECK_THROWS_AS(bcs::fermi_difference(1.0e-22, -1.0e-30, 1.0), DomainError);
    CHECK_THROWS_AS(bcs::fermi_difference(1.0e-22, 1.0e-30, 0.0), DomainError);
}

TEST_CASE("zero-temperature gap scale") {
    const double d0 = bcs::gap_zero_temperature(kNb);
    CHECK(d0 == doctest::Approx(1.764 * k_b * 9.25).epsilon(1e-14));

    Material doubled = kNb;
    doubled.tc *= 2.0;
    CHECK(bcs::gap_zero_temperature(doubled) == doctest::Approx(2.0 * d0).epsilon(1e-14));

    Material bad = kNb;
    bad.delta0_ratio = 0.0;
    CHECK_THROWS_AS(bcs::gap_zero_temperature(bad), DomainError);
}

TEST_CASE("self-consistent gap") {
    SUBCASE("endpoints") {
        CHECK(bcs::gap(0.0, kNb).reduced_gap == 1.0);
        CHECK(bcs::gap(kNb.tc, kNb).reduced_gap == 0.0);
        CHECK(bcs::gap(1.1 * kNb.tc, kNb).reduced_gap == 0.0);
        CHECK_THROWS_AS(bcs::gap(-0.1, kNb), DomainError);
    }
    SUBCASE("half-Tc spot value") {
        const auto g = bcs::gap(0.5 * kNb.tc, kNb);
        CHECK(g.converged);
        CHECK(std::fabs(g.reduced_gap - 0.9569) <= 5e-4);
        CHECK(g.delta == g.reduced_gap * g.delta0); // exact by construction
    }
    SUBCASE("monotone non-increasing over [0, 1.1 Tc]") {
        double prev = 1.1;
        for (int i = 0; i < 50; ++i) {
            const double t = 1.1 * kNb.tc * i / 49.0;
            const double d = bcs::gap(t, kNb).reduced_gap;
            CHECK(d <= prev + 1e-12);
            CHECK(d >= 0.0);
            CHECK(d <= 1.0);
            prev = d;
        }
    }
    SUBCASE("depends only on T/Tc") {
        Material scaled = kNb;
        scaled.tc = 2.0 * kNb.tc;
        const double a = bcs::gap(0.37 * kNb.tc, kNb).reduced_gap;
        const double b = bcs::gap(0.37 * scaled.tc, scaled).reduced_gap;
        CHECK(std::fabs(a - b) <= 1e-8);
    }
    SUBCASE("gap stays open just below the snap window and closes at Tc") {
        const double d_below = bcs::gap((1.0 - 2e-6) * kNb.tc, kNb).reduced_gap;
        CHECK(d_below > 0.0);
        CHECK(bcs::gap((1.0 - 5e-7) * kNb.tc, kNb).reduced_gap == 0.0);
    }
    SUBCASE("a sub-weak-coupling ratio closes the gap below Tc instead of failing") {
        Material weak = kNb;
        weak.delta0_ratio = 1.5; // gap equation loses its root near t ~ 0.85
        CHECK(bcs::gap(0.99 * weak.tc, weak).reduced_gap == 0.0);
        CHECK(bcs::gap(0.5 * weak.tc, weak).reduced_gap > 0.0);
    }
}
