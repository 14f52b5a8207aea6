#include "doctest.h"

#include "scsigma/config.hpp"
#include "scsigma/errors.hpp"
#include "scsigma/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

using namespace scsigma;

namespace {

const char *kMinimalConfig = "material.tc_kelvin = 9.25\n"
                             "material.sigma_n_s_per_m = 2e8\n"
                             "material.lambda_l0_m = 35e-9\n"
                             "run.frequency_hz = 560e3\n"
                             "run.model = gc\n"
                             "sweep.t_min_kelvin = 4.625\n"
                             "sweep.t_max_kelvin = 9.25\n"
                             "sweep.points = 3\n";

std::string with_line(const std::string &extra) {
    return std::string(kMinimalConfig) + extra + "\n";
}

} // namespace

TEST_CASE("minimal config fills the defaults") {
    const RunConfig cfg = parse_config(kMinimalConfig);
    CHECK(cfg.material.tc == 9.25);
    CHECK(cfg.material.sigma_n == 2e8);
    CHECK(cfg.material.lambda_l0 == 35e-9);
    CHECK(cfg.material.delta0_ratio == 1.764);
    CHECK(cfg.material.dynes_gamma_ratio == 0.0);
    CHECK(cfg.model == ModelKind::GorterCasimir);
    CHECK(cfg.normalization == Sigma2Normalization::None);
    CHECK(cfg.sweep.spacing == GridSpacing::Linear);
    CHECK(cfg.sweep.points == 3);
    CHECK_FALSE(cfg.output.csv_path.has_value());
    CHECK_FALSE(cfg.output.svg_path.has_value());
}

TEST_CASE("comments and blank lines are ignored") {
    const RunConfig cfg = parse_config("# leading comment\n\n" + with_line("run.normalize_sigma2 = lambda0 # trailing"));
    CHECK(cfg.normalization == Sigma2Normalization::MatchLambda0);
}

TEST_CASE("config parse failures carry line and key") {
    SUBCASE("unknown key") {
        try {
            parse_config(with_line("run.modle = gc"));
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(e.line() == 9);
            CHECK(e.key() == "run.modle");
        }
    }
    SUBCASE("unknown model value") {
        try {
            parse_config(std::string("run.model = xyz\n") + "material.tc_kelvin = 9.25\n"
                         "material.sigma_n_s_per_m = 2e8\nmaterial.lambda_l0_m = 35e-9\n"
                         "run.frequency_hz = 560e3\nsweep.t_min_kelvin = 1\n"
                         "sweep.t_max_kelvin = 9\nsweep.points = 2\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(e.line() == 1);
            CHECK(e.key() == "run.model");
        }
    }
    SUBCASE("duplicate key is rejected at the repeated line") {
        try {
            parse_config(with_line("material.tc_kelvin = 9.3"));
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(e.line() == 9);
            CHECK(e.key() == "material.tc_kelvin");
            CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
        }
    }
    SUBCASE("missing required key") {
        CHECK_THROWS_AS(parse_config("material.tc_kelvin = 9.25\n"), ConfigError);
    }
    SUBCASE("malformed number") {
        CHECK_THROWS_AS(parse_config(with_line("material.delta0_over_kbtc = fast")), ConfigError);
    }
    SUBCASE("non-integer points") {
        CHECK_THROWS_AS(parse_config(std::string(kMinimalConfig) + "sweep.points = 2.5\n"),
                        ConfigError);
    }
    SUBCASE("cross-field invariants") {
        CHECK_THROWS_AS(parse_config("material.tc_kelvin = 9.25\n"
                                     "material.sigma_n_s_per_m = 2e8\n"
                                     "material.lambda_l0_m = 35e-9\n"
                                     "run.frequency_hz = 560e3\n"
                                     "run.model = gc\n"
                                     "sweep.t_min_kelvin = 9.25\n"
                                     "sweep.t_max_kelvin = 4.6\n"
                                     "sweep.points = 3\n"),
                        ConfigError);
        // GC sweeps must not cross Tc
        CHECK_THROWS_AS(parse_config("material.tc_kelvin = 9.25\n"
                                     "material.sigma_n_s_per_m = 2e8\n"
                                     "material.lambda_l0_m = 35e-9\n"
                                     "run.frequency_hz = 560e3\n"
                                     "run.model = gc\n"
                                     "sweep.t_min_kelvin = 4.6\n"
                                     "sweep.t_max_kelvin = 10.0\n"
                                     "sweep.points = 3\n"),
                        ConfigError);
        // log spacing needs a positive lower bound
        CHECK_THROWS_AS(parse_config("material.tc_kelvin = 9.25\n"
                                     "material.sigma_n_s_per_m = 2e8\n"
                                     "material.lambda_l0_m = 35e-9\n"
                                     "run.frequency_hz = 560e3\n"
                                     "run.model = gc\n"
                                     "sweep.t_min_kelvin = 0\n"
                                     "sweep.t_max_kelvin = 9.25\n"
                                     "sweep.points = 3\n"
                                     "sweep.spacing = log\n"),
                        ConfigError);
        CHECK_THROWS_AS(parse_config("material.tc_kelvin = -1\n"
                                     "material.sigma_n_s_per_m = 2e8\n"
                                     "material.lambda_l0_m = 35e-9\n"
                                     "run.frequency_hz = 560e3\n"
                                     "run.model = gc\n"
                                     "sweep.t_min_kelvin = 0.5\n"
                                     "sweep.t_max_kelvin = 0.9\n"
                                     "sweep.points = 2\n"),
                        ConfigError);
    }
}

TEST_CASE("float formatting contract") {
    CHECK(format_float(6.09371e20) == "6.09371000e20");
    CHECK(format_float(4.625) == "4.62500000e0");
    CHECK(format_float(0.5) == "5.00000000e-1");
    CHECK(format_float(0.0) == "0.00000000e0");
    CHECK(format_float(-1.5e-7) == "-1.50000000e-7");
    CHECK(format_float(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_float(1.23456789123e5) == "1.23456789e5");
}

TEST_CASE("csv emission") {
    SUBCASE("empty result is just the header") {
        CHECK(emit_csv(SweepResult{}) ==
              "temperature_K,t_reduced,sigma1_S_per_m,sigma2_S_per_m,skin_depth_m,"
              "london_depth_m,lifetime_proxy,regime_valid\n");
    }
    SUBCASE("rows render in order with one trailing newline") {
        const RunConfig cfg = parse_config(kMinimalConfig);
        const SweepResult result = run_sweep(cfg);
        const std::string csv = emit_csv(result);
        CHECK(csv.back() == '\n');
        CHECK(csv.find("\n\n") == std::string::npos);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 3 rows

        // endpoint law: the last row sits at Tc with sigma2 = 0, infinite
        // London depth, zero proxy
        const auto last = csv.rfind('\n', csv.size() - 2);
        const std::string row = csv.substr(last + 1, csv.size() - last - 2);
        CHECK(row.find(",inf,0.00000000e0,false") != std::string::npos); // london, proxy, regime
        CHECK(row.find(",0.00000000e0,") != std::string::npos);          // sigma2 = 0
    }
    SUBCASE("numeric fields parse back to the emitted precision") {
        const RunConfig cfg = parse_config(kMinimalConfig);
        const SweepResult result = run_sweep(cfg);
        const std::string csv = emit_csv(result);
        std::istringstream lines(csv);
        std::string line;
        std::getline(lines, line); // header
        std::size_t row_index = 0;
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string field;
            std::getline(fields, field, ',');
            const double back = std::strtod(field.c_str(), nullptr);
            CHECK(back ==
                  doctest::Approx(result.rows[row_index].temperature_k).epsilon(1e-8));
            ++row_index;
        }
        CHECK(row_index == result.rows.size());
    }
}

TEST_CASE("svg emission") {
    RunConfig cfg = parse_config(kMinimalConfig);
    cfg.sweep.points = 2;
    const SweepResult result = run_sweep(cfg);

    SUBCASE("two-point sweep yields one polyline with two coordinate pairs") {
        const std::string svg = emit_svg(result, "sigma1_S_per_m");
        CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
        CHECK(std::count(svg.begin(), svg.end(), ',') >= 2);
        const auto first = svg.find("<polyline");
        CHECK(first != std::string::npos);
        CHECK(svg.find("<polyline", first + 1) == std::string::npos);
        const auto points = svg.find("points=\"", first);
        const auto end = svg.find('"', points + 8);
        const std::string coords = svg.substr(points + 8, end - points - 8);
        CHECK(std::count(coords.begin(), coords.end(), ',') == 2);
    }
    SUBCASE("constant series renders at mid-height") {
        SweepResult flat = result;
        flat.rows[0].lifetime_proxy = 3.5;
        flat.rows[1].lifetime_proxy = 3.5;
        const std::string svg = emit_svg(flat, "lifetime_proxy");
        // autoscale band is value +- 1, so both points sit at the vertical center
        CHECK(svg.find("290.000") != std::string::npos);
    }
    SUBCASE("unknown series is rejected") {
        CHECK_THROWS_AS(emit_svg(result, "foo"), DomainError);
        CHECK_THROWS_AS(emit_svg(result, "regime_valid"), DomainError);
    }
    SUBCASE("non-finite samples drop out of the polyline") {
        cfg.sweep.points = 3;
        const SweepResult with_inf = run_sweep(cfg); // last row has infinite London depth
        const std::string svg = emit_svg(with_inf, "london_depth_m");
        const auto points = svg.find("points=\"");
        const auto end = svg.find('"', points + 8);
        const std::string coords = svg.substr(points + 8, end - points - 8);
        CHECK(std::count(coords.begin(), coords.end(), ',') == 2); // one row dropped
    }
}

TEST_CASE("temperature grids") {
    SUBCASE("linear grid hits both ends with the exact count") {
        const auto grid = temperature_grid(SweepSpec{2.0, 9.0, 8, GridSpacing::Linear});
        CHECK(grid.size() == 8);
        CHECK(grid.front() == 2.0);
        CHECK(grid.back() == 9.0);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            CHECK(grid[i] > grid[i - 1]);
        }
    }
    SUBCASE("log grid is geometric") {
        const auto grid = temperature_grid(SweepSpec{1.0, 100.0, 3, GridSpacing::Log});
        CHECK(grid[1] == doctest::Approx(10.0).epsilon(1e-12));
        CHECK(grid.back() == 100.0);
    }
}

TEST_CASE("sweep determinism across thread counts") {
    RunConfig cfg = parse_config(kMinimalConfig);
    cfg.sweep.points = 17;
    cfg.sweep.t_max_kelvin = 9.0;
    const std::string serial = emit_csv(run_sweep(cfg, 1));
    const std::string parallel = emit_csv(run_sweep(cfg, 4));
    const std::string again = emit_csv(run_sweep(cfg, 1));
    CHECK(serial == parallel);
    CHECK(serial == again);
}
