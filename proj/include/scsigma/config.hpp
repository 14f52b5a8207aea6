#pragma once

#include "scsigma/conductivity.hpp"
#include "scsigma/constants.hpp"
#include "scsigma/types.hpp"

#include <optional>
#include <string>

namespace scsigma {

enum class GridSpacing { Linear, Log };

struct SweepSpec {
    double t_min_kelvin;
    double t_max_kelvin;
    int points;
    GridSpacing spacing = GridSpacing::Linear;
};

struct OutputSpec {
    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;
};

struct RunConfig {
    Material material;
    double frequency_hz;
    ModelKind model;
    Sigma2Normalization normalization = Sigma2Normalization::None;
    SweepSpec sweep;
    OutputSpec output;

    double omega() const { return 2.0 * constants::pi * frequency_hz; }
};

/// Parses the flat "key = value" run-configuration format ('#' starts a
/// comment, one pair per line). Unknown keys, duplicate keys, malformed
/// values and violated invariants all raise ConfigError carrying the line
/// number and key name.
///
/// Keys (defaults in parentheses):
///   material.tc_kelvin                 required
///   material.sigma_n_s_per_m           required
///   material.lambda_l0_m               required
///   material.delta0_over_kbtc          (1.764)
///   material.dynes_gamma_over_delta0   (0)
///   run.frequency_hz                   required
///   run.model                          required; gc | mb | mb_dynes
///   run.normalize_sigma2               (none); none | lambda0
///   sweep.t_min_kelvin                 required
///   sweep.t_max_kelvin                 required
///   sweep.points                       required; >= 2
///   sweep.spacing                      (linear); linear | log
///   output.csv_path                    optional
///   output.svg_path                    optional
RunConfig parse_config(const std::string &text);

} // namespace scsigma
