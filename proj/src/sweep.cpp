#include "scsigma/sweep.hpp"

#include "scsigma/conductivity.hpp"
#include "scsigma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

namespace scsigma {

namespace {

constexpr const char *kCsvHeader = "temperature_K,t_reduced,sigma1_S_per_m,sigma2_S_per_m,"
                                   "skin_depth_m,london_depth_m,lifetime_proxy,regime_valid";

std::string with_temperature(const char *what, double temperature) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", temperature);
    return std::string("sweep failed at T = ") + buf + " K: " + what;
}

} // namespace

std::vector<double> temperature_grid(const SweepSpec &spec) {
    const int n = spec.points;
    std::vector<double> grid(static_cast<std::size_t>(n));
    if (spec.spacing == GridSpacing::Linear) {
        const double step = (spec.t_max_kelvin - spec.t_min_kelvin) / (n - 1);
        for (int i = 0; i < n; ++i) {
            grid[i] = (i == n - 1) ? spec.t_max_kelvin : spec.t_min_kelvin + step * i;
        }
    } else {
        const double ratio = spec.t_max_kelvin / spec.t_min_kelvin;
        for (int i = 0; i < n; ++i) {
            grid[i] = (i == n - 1) ? spec.t_max_kelvin
                                   : spec.t_min_kelvin *
                                         std::pow(ratio, static_cast<double>(i) / (n - 1));
        }
    }
    return grid;
}

SweepRow evaluate_sweep_row(const RunConfig &cfg, double temperature) {
    const double omega = cfg.omega();
    const ComplexConductivity sigma =
        conductivity(cfg.model, temperature, omega, cfg.material, cfg.normalization);
    const Depths depths = depths_from_sigma(sigma, omega);

    // A closed dissipative channel (sigma1 = 0, e.g. at T = 0) means an
    // unbounded proxy; the row renders it as inf instead of aborting.
    double proxy;
    bool regime;
    if (sigma.sigma1 > 0.0) {
        proxy = sigma.sigma2 * std::sqrt(sigma.sigma2) / sigma.sigma1;
        regime = sigma.sigma2 >= 100.0 * sigma.sigma1;
    } else {
        proxy = std::numeric_limits<double>::infinity();
        regime = true;
    }

    return SweepRow{temperature, temperature / cfg.material.tc, sigma.sigma1, sigma.sigma2,
                    depths.skin_depth, depths.london_depth, proxy, regime};
}

SweepResult run_sweep(const RunConfig &cfg, int threads) {
    const std::vector<double> grid = temperature_grid(cfg.sweep);
    const std::size_t n = grid.size();
    SweepResult result;
    result.rows.resize(n);

    const int workers = std::clamp<int>(threads, 1, static_cast<int>(n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                result.rows[i] = evaluate_sweep_row(cfg, grid[i]);
            } catch (const ConvergenceError &e) {
                throw ConvergenceError(with_temperature(e.what(), grid[i]));
            } catch (const DomainError &e) {
                throw DomainError(with_temperature(e.what(), grid[i]));
            }
        }
        return result;
    }

    // Concurrent evaluation over disjoint grid points. Each row is a pure
    // computation, so the assembled result is identical to the serial one;
    // error reporting stays deterministic by picking the lowest failed index.
    enum class ErrKind { None, Domain, Convergence };
    std::vector<ErrKind> err_kind(n, ErrKind::None);
    std::vector<std::string> err_text(n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers)) {
                try {
                    result.rows[i] = evaluate_sweep_row(cfg, grid[i]);
                } catch (const ConvergenceError &e) {
                    err_kind[i] = ErrKind::Convergence;
                    err_text[i] = e.what();
                } catch (const DomainError &e) {
                    err_kind[i] = ErrKind::Domain;
                    err_text[i] = e.what();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (err_kind[i] == ErrKind::Domain) {
            throw DomainError(with_temperature(err_text[i].c_str(), grid[i]));
        }
        if (err_kind[i] == ErrKind::Convergence) {
            throw ConvergenceError(with_temperature(err_text[i].c_str(), grid[i]));
        }
    }
    return result;
}

std::string format_float(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v < 0.0 ? "-inf" : "inf";
    }
    if (v == 0.0) {
        return "0.00000000e0";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    const std::string s(buf);
    const auto epos = s.find('e');
    const int exponent = std::stoi(s.substr(epos + 1));
    return s.substr(0, epos) + "e" + std::to_string(exponent);
}

std::string emit_csv(const SweepResult &result) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const SweepRow &row : result.rows) {
        out += format_float(row.temperature_k);
        out.push_back(',');
        out += format_float(row.t_reduced);
        out.push_back(',');
        out += format_float(row.sigma1);
        out.push_back(',');
        out += format_float(row.sigma2);
        out.push_back(',');
        out += format_float(row.skin_depth);
        out.push_back(',');
        out += format_float(row.london_depth);
        out.push_back(',');
        out += format_float(row.lifetime_proxy);
        out.push_back(',');
        out += row.regime_valid ? "true" : "false";
        out.push_back('\n');
    }
    return out;
}

namespace {

struct SeriesAccessor {
    const char *name;
    double SweepRow::*member;
};

constexpr SeriesAccessor kSeries[] = {
    {"temperature_K", &SweepRow::temperature_k},
    {"t_reduced", &SweepRow::t_reduced},
    {"sigma1_S_per_m", &SweepRow::sigma1},
    {"sigma2_S_per_m", &SweepRow::sigma2},
    {"skin_depth_m", &SweepRow::skin_depth},
    {"london_depth_m", &SweepRow::london_depth},
    {"lifetime_proxy", &SweepRow::lifetime_proxy},
};

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string emit_svg(const SweepResult &result, const std::string &series) {
    const SeriesAccessor *accessor = nullptr;
    for (const auto &s : kSeries) {
        if (series == s.name) {
            accessor = &s;
            break;
        }
    }
    if (accessor == nullptr) {
        throw DomainError("unknown SVG series '" + series + "'");
    }

    // finite points only; non-finite samples (e.g. infinite depths) are
    // dropped from both autoscaling and the polyline
    std::vector<std::pair<double, double>> pts;
    pts.reserve(result.rows.size());
    for (const SweepRow &row : result.rows) {
        const double y = row.*(accessor->member);
        if (std::isfinite(row.temperature_k) && std::isfinite(y)) {
            pts.emplace_back(row.temperature_k, y);
        }
    }

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!pts.empty()) {
        xmin = xmax = pts.front().first;
        ymin = ymax = pts.front().second;
        for (const auto &[x, y] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    auto pad = [](double &lo, double &hi) {
        const double range = hi - lo;
        if (range == 0.0) {
            lo -= 1.0; // degenerate autoscale: +-1 unit band
            hi += 1.0;
        } else {
            lo -= 0.05 * range;
            hi += 0.05 * range;
        }
    };
    pad(xmin, xmax);
    pad(ymin, ymax);

    constexpr double left = 90.0, right = 770.0, top = 40.0, bottom = 540.0;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
    auto sy = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n"
        << "  <line x1=\"90\" y1=\"540\" x2=\"770\" y2=\"540\" stroke=\"#000000\"/>\n"
        << "  <line x1=\"90\" y1=\"40\" x2=\"90\" y2=\"540\" stroke=\"#000000\"/>\n"
        << "  <text x=\"430\" y=\"580\" text-anchor=\"middle\" font-size=\"16\">temperature_K"
        << "</text>\n"
        << "  <text x=\"24\" y=\"290\" text-anchor=\"middle\" font-size=\"16\" "
        << "transform=\"rotate(-90 24 290)\">" << accessor->name << "</text>\n"
        << "  <text x=\"90\" y=\"558\" text-anchor=\"middle\" font-size=\"12\">"
        << format_float(xmin) << "</text>\n"
        << "  <text x=\"770\" y=\"558\" text-anchor=\"middle\" font-size=\"12\">"
        << format_float(xmax) << "</text>\n"
        << "  <text x=\"84\" y=\"544\" text-anchor=\"end\" font-size=\"12\">" << format_float(ymin)
        << "</text>\n"
        << "  <text x=\"84\" y=\"44\" text-anchor=\"end\" font-size=\"12\">" << format_float(ymax)
        << "</text>\n"
        << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != 0) {
            svg << ' ';
        }
        svg << fmt_coord(sx(pts[i].first)) << ',' << fmt_coord(sy(pts[i].second));
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

} // namespace scsigma
