#include "scsigma/config.hpp"

#include "scsigma/errors.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace scsigma {

namespace {

const std::set<std::string> kKnownKeys = {
    "material.tc_kelvin",        "material.sigma_n_s_per_m",
    "material.lambda_l0_m",      "material.delta0_over_kbtc",
    "material.dynes_gamma_over_delta0",
    "run.frequency_hz",          "run.model",
    "run.normalize_sigma2",      "sweep.t_min_kelvin",
    "sweep.t_max_kelvin",        "sweep.points",
    "sweep.spacing",             "output.csv_path",
    "output.svg_path",
};

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    int line;
};

double parse_number(const Entry &e, const std::string &key) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(e.value, &consumed);
    } catch (const std::exception &) {
        throw ConfigError(e.line, key, "not a number: '" + e.value + "'");
    }
    if (consumed != e.value.size()) {
        throw ConfigError(e.line, key, "trailing characters after number: '" + e.value + "'");
    }
    return v;
}

int parse_integer(const Entry &e, const std::string &key) {
    std::size_t consumed = 0;
    long v = 0;
    try {
        v = std::stol(e.value, &consumed);
    } catch (const std::exception &) {
        throw ConfigError(e.line, key, "not an integer: '" + e.value + "'");
    }
    if (consumed != e.value.size()) {
        throw ConfigError(e.line, key, "trailing characters after integer: '" + e.value + "'");
    }
    return static_cast<int>(v);
}

} // namespace

RunConfig parse_config(const std::string &text) {
    std::map<std::string, Entry> entries;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line_no, line, "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(line_no, key, "empty key");
        }
        if (kKnownKeys.find(key) == kKnownKeys.end()) {
            throw ConfigError(line_no, key, "unknown key");
        }
        if (entries.count(key) != 0) {
            throw ConfigError(line_no, key, "duplicate key");
        }
        if (value.empty()) {
            throw ConfigError(line_no, key, "empty value");
        }
        entries.emplace(key, Entry{value, line_no});
    }

    auto required = [&](const std::string &key) -> const Entry & {
        auto it = entries.find(key);
        if (it == entries.end()) {
            throw ConfigError(0, key, "missing required key");
        }
        return it->second;
    };
    auto optional = [&](const std::string &key) -> const Entry * {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    RunConfig cfg;
    cfg.material.tc = parse_number(required("material.tc_kelvin"), "material.tc_kelvin");
    cfg.material.sigma_n =
        parse_number(required("material.sigma_n_s_per_m"), "material.sigma_n_s_per_m");
    cfg.material.lambda_l0 =
        parse_number(required("material.lambda_l0_m"), "material.lambda_l0_m");
    if (const Entry *e = optional("material.delta0_over_kbtc")) {
        cfg.material.delta0_ratio = parse_number(*e, "material.delta0_over_kbtc");
    }
    if (const Entry *e = optional("material.dynes_gamma_over_delta0")) {
        cfg.material.dynes_gamma_ratio = parse_number(*e, "material.dynes_gamma_over_delta0");
    }

    cfg.frequency_hz = parse_number(required("run.frequency_hz"), "run.frequency_hz");

    {
        const Entry &e = required("run.model");
        if (e.value == "gc") {
            cfg.model = ModelKind::GorterCasimir;
        } else if (e.value == "mb") {
            cfg.model = ModelKind::MattisBardeen;
        } else if (e.value == "mb_dynes") {
            cfg.model = ModelKind::MattisBardeenDynes;
        } else {
            throw ConfigError(e.line, "run.model",
                              "unknown model '" + e.value + "' (expected gc, mb or mb_dynes)");
        }
    }
    if (const Entry *e = optional("run.normalize_sigma2")) {
        if (e->value == "none") {
            cfg.normalization = Sigma2Normalization::None;
        } else if (e->value == "lambda0") {
            cfg.normalization = Sigma2Normalization::MatchLambda0;
        } else {
            throw ConfigError(e->line, "run.normalize_sigma2",
                              "unknown value '" + e->value + "' (expected none or lambda0)");
        }
    }

    cfg.sweep.t_min_kelvin = parse_number(required("sweep.t_min_kelvin"), "sweep.t_min_kelvin");
    cfg.sweep.t_max_kelvin = parse_number(required("sweep.t_max_kelvin"), "sweep.t_max_kelvin");
    cfg.sweep.points = parse_integer(required("sweep.points"), "sweep.points");
    if (const Entry *e = optional("sweep.spacing")) {
        if (e->value == "linear") {
            cfg.sweep.spacing = GridSpacing::Linear;
        } else if (e->value == "log") {
            cfg.sweep.spacing = GridSpacing::Log;
        } else {
            throw ConfigError(e->line, "sweep.spacing",
                              "unknown value '" + e->value + "' (expected linear or log)");
        }
    }

    if (const Entry *e = optional("output.csv_path")) {
        cfg.output.csv_path = e->value;
    }
    if (const Entry *e = optional("output.svg_path")) {
        cfg.output.svg_path = e->value;
    }

    // cross-field invariants, reported against the key that violates them
    try {
        validate_material(cfg.material);
    } catch (const DomainError &err) {
        throw ConfigError(0, "material", err.what());
    }
    if (!(cfg.frequency_hz > 0.0)) {
        throw ConfigError(required("run.frequency_hz").line, "run.frequency_hz",
                          "must be positive");
    }
    if (cfg.sweep.points < 2) {
        throw ConfigError(required("sweep.points").line, "sweep.points", "must be at least 2");
    }
    if (!(cfg.sweep.t_min_kelvin < cfg.sweep.t_max_kelvin)) {
        throw ConfigError(required("sweep.t_max_kelvin").line, "sweep.t_max_kelvin",
                          "sweep.t_min_kelvin must be below sweep.t_max_kelvin");
    }
    if (cfg.sweep.t_min_kelvin < 0.0) {
        throw ConfigError(required("sweep.t_min_kelvin").line, "sweep.t_min_kelvin",
                          "must be non-negative");
    }
    if (cfg.sweep.spacing == GridSpacing::Log && !(cfg.sweep.t_min_kelvin > 0.0)) {
        throw ConfigError(required("sweep.t_min_kelvin").line, "sweep.t_min_kelvin",
                          "log spacing requires a positive lower bound");
    }
    if (cfg.model == ModelKind::GorterCasimir && cfg.sweep.t_max_kelvin > cfg.material.tc) {
        throw ConfigError(required("sweep.t_max_kelvin").line, "sweep.t_max_kelvin",
                          "Gorter-Casimir sweeps must stay at or below material.tc_kelvin");
    }

    return cfg;
}

} // namespace scsigma
