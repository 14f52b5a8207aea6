#pragma once

#include "scsigma/config.hpp"

#include <string>
#include <vector>

namespace scsigma {

struct SweepRow {
    double temperature_k;
    double t_reduced;
    double sigma1;
    double sigma2;
    double skin_depth;
    double london_depth;
    double lifetime_proxy;
    bool regime_valid;
};

struct SweepResult {
    std::vector<SweepRow> rows; // strictly ordered by temperature
};

/// The evaluation grid for a sweep spec (strictly increasing, spec.points
/// entries).
std::vector<double> temperature_grid(const SweepSpec &spec);

/// One fully evaluated grid point under cfg's model. Rows where sigma1 = 0
/// carry an infinite lifetime proxy (the dissipative channel is closed).
SweepRow evaluate_sweep_row(const RunConfig &cfg, double temperature);

/// Evaluates the whole grid. Grid points may be computed on up to `threads`
/// workers; rows are returned in grid order and the output is bit-identical
/// for any thread count. The first failing grid point (lowest index) aborts
/// the sweep with the offending temperature in the error message.
SweepResult run_sweep(const RunConfig &cfg, int threads = 1);

/// Lowercase scientific notation with 9 significant digits and a bare
/// exponent ("6.09011262e20", "5.00000000e-1"); infinities render as "inf".
std::string format_float(double v);

/// CSV document: fixed header, one line per row, LF endings, exactly one
/// trailing LF. Floats via format_float, booleans as true/false.
std::string emit_csv(const SweepResult &result);

/// Standalone 800x600 SVG with one polyline of the chosen numeric series
/// versus temperature, axes autoscaled to the data with 5% margins (a
/// constant series gets a +-1 band). Throws DomainError for an unknown or
/// non-numeric series name.
std::string emit_svg(const SweepResult &result, const std::string &series);

} // namespace scsigma
