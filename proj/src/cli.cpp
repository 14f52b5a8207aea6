#include "scsigma/cli.hpp"

#include "scsigma/config.hpp"
#include "scsigma/errors.hpp"
#include "scsigma/lifetime.hpp"
#include "scsigma/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace scsigma {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

void print_usage(std::ostream &err) {
    err << "usage: scsigma <command> --config FILE [options]\n"
           "\n"
           "commands:\n"
           "  sigma    --config FILE --temp KELVIN [--freq HZ]\n"
           "           print one CSV row at a single temperature\n"
           "  sweep    --config FILE [--out FILE.csv] [--svg FILE.svg] [--threads N]\n"
           "           evaluate the configured temperature grid\n"
           "  peak     --config FILE [--gamma G]\n"
           "           locate the sigma1/sigma_n coherence peak\n"
           "  ratio    --config FILE --t1 KELVIN --t2 KELVIN\n"
           "           lifetime proxy ratio between two temperatures\n"
           "  compare  --config FILE [--out FILE.csv] [--threads N]\n"
           "           per-temperature Gorter-Casimir and Mattis-Bardeen sigma1\n"
           "\n"
           "exit codes: 0 success, 2 configuration/usage error, 3 numerical failure\n";
}

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using FlagMap = std::map<std::string, std::string>;

FlagMap parse_flags(const std::vector<std::string> &args, std::size_t first,
                    const std::set<std::string> &allowed) {
    FlagMap flags;
    for (std::size_t i = first; i < args.size(); ++i) {
        const std::string &name = args[i];
        if (name.rfind("--", 0) != 0) {
            throw UsageError("unexpected argument '" + name + "'");
        }
        if (allowed.find(name) == allowed.end()) {
            throw UsageError("unknown option '" + name + "'");
        }
        if (i + 1 >= args.size()) {
            throw UsageError("option '" + name + "' expects a value");
        }
        flags[name] = args[++i];
    }
    return flags;
}

double flag_number(const FlagMap &flags, const std::string &name) {
    const std::string &text = flags.at(name);
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &consumed);
    } catch (const std::exception &) {
        throw UsageError("option '" + name + "' expects a number, got '" + text + "'");
    }
    if (consumed != text.size()) {
        throw UsageError("option '" + name + "' expects a number, got '" + text + "'");
    }
    return v;
}

RunConfig load_config(const FlagMap &flags) {
    auto it = flags.find("--config");
    if (it == flags.end()) {
        throw UsageError("missing required option '--config'");
    }
    std::ifstream in(it->second, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read config file '" + it->second + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

int threads_from(const FlagMap &flags) {
    if (flags.count("--threads") == 0) {
        return 1;
    }
    const double v = flag_number(flags, "--threads");
    if (v < 1.0 || v != static_cast<int>(v)) {
        throw UsageError("option '--threads' expects a positive integer");
    }
    return static_cast<int>(v);
}

void apply_freq_override(RunConfig &cfg, const FlagMap &flags) {
    if (flags.count("--freq") != 0) {
        const double f = flag_number(flags, "--freq");
        if (!(f > 0.0)) {
            throw UsageError("option '--freq' expects a positive frequency");
        }
        cfg.frequency_hz = f;
    }
}

int cmd_sigma(const std::vector<std::string> &args, std::ostream &out) {
    const FlagMap flags = parse_flags(args, 1, {"--config", "--temp", "--freq"});
    RunConfig cfg = load_config(flags);
    if (flags.count("--temp") == 0) {
        throw UsageError("sigma requires '--temp'");
    }
    const double temperature = flag_number(flags, "--temp");
    apply_freq_override(cfg, flags);

    SweepResult single;
    single.rows.push_back(evaluate_sweep_row(cfg, temperature));
    out << emit_csv(single);
    return kExitOk;
}

int cmd_sweep(const std::vector<std::string> &args, std::ostream &out) {
    const FlagMap flags = parse_flags(args, 1, {"--config", "--out", "--svg", "--threads"});
    RunConfig cfg = load_config(flags);
    const int threads = threads_from(flags);

    const SweepResult result = run_sweep(cfg, threads);
    const std::string csv = emit_csv(result);

    std::optional<std::string> csv_path = cfg.output.csv_path;
    if (flags.count("--out") != 0) {
        csv_path = flags.at("--out");
    }
    std::optional<std::string> svg_path = cfg.output.svg_path;
    if (flags.count("--svg") != 0) {
        svg_path = flags.at("--svg");
    }

    if (csv_path) {
        write_file(*csv_path, csv);
    } else {
        out << csv;
    }
    if (svg_path) {
        write_file(*svg_path, emit_svg(result, "lifetime_proxy"));
    }
    return kExitOk;
}

int cmd_peak(const std::vector<std::string> &args, std::ostream &out) {
    const FlagMap flags = parse_flags(args, 1, {"--config", "--gamma"});
    const RunConfig cfg = load_config(flags);
    double gamma = cfg.material.dynes_gamma_ratio;
    if (flags.count("--gamma") != 0) {
        gamma = flag_number(flags, "--gamma");
        if (gamma < 0.0) {
            throw UsageError("option '--gamma' expects a non-negative ratio");
        }
    }
    const PeakReport report = coherence_peak(cfg.material, cfg.omega(), gamma);
    out << "t_peak = " << format_float(report.t_peak) << "\n"
        << "height = " << format_float(report.height) << "\n"
        << "gamma_ratio = " << format_float(report.gamma_ratio) << "\n";
    return kExitOk;
}

int cmd_ratio(const std::vector<std::string> &args, std::ostream &out) {
    const FlagMap flags = parse_flags(args, 1, {"--config", "--t1", "--t2"});
    const RunConfig cfg = load_config(flags);
    if (flags.count("--t1") == 0 || flags.count("--t2") == 0) {
        throw UsageError("ratio requires '--t1' and '--t2'");
    }
    const double t1 = flag_number(flags, "--t1");
    const double t2 = flag_number(flags, "--t2");
    const LifetimeRatio r =
        lifetime_ratio(cfg.model, t1, t2, cfg.omega(), cfg.material, cfg.normalization);
    out << format_float(r.value) << "\n";
    return kExitOk;
}

int cmd_compare(const std::vector<std::string> &args, std::ostream &out) {
    const FlagMap flags = parse_flags(args, 1, {"--config", "--out", "--threads"});
    const RunConfig cfg = load_config(flags);
    const int threads = threads_from(flags);
    const double omega = cfg.omega();
    const std::vector<double> grid = temperature_grid(cfg.sweep);

    std::vector<std::string> lines(grid.size());
    auto eval_line = [&](std::size_t i) {
        const double temperature = grid[i];
        const ComplexConductivity gc = gorter_casimir_sigma(temperature, cfg.material, omega);
        const double mb = mb_sigma1_ratio(omega, temperature, cfg.material) * cfg.material.sigma_n;
        std::string line = format_float(temperature);
        line += ',';
        line += format_float(temperature / cfg.material.tc);
        line += ',';
        line += format_float(gc.sigma1);
        line += ',';
        line += format_float(mb);
        line += ',';
        line += format_float(mb / gc.sigma1);
        lines[i] = line;
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            eval_line(i);
        }
    } else {
        std::vector<std::thread> pool;
        const int workers = std::min<int>(threads, static_cast<int>(grid.size()));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < grid.size();
                     i += static_cast<std::size_t>(workers)) {
                    eval_line(i);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    std::string csv = "temperature_K,t_reduced,gc_sigma1_S_per_m,mb_sigma1_S_per_m,mb_over_gc\n";
    for (const std::string &line : lines) {
        csv += line;
        csv.push_back('\n');
    }

    std::optional<std::string> csv_path = cfg.output.csv_path;
    if (flags.count("--out") != 0) {
        csv_path = flags.at("--out");
    }
    if (csv_path) {
        write_file(*csv_path, csv);
    } else {
        out << csv;
    }
    return kExitOk;
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    if (args.empty()) {
        print_usage(err);
        return kExitUsage;
    }
    const std::string &command = args[0];
    try {
        if (command == "sigma") {
            return cmd_sigma(args, out);
        }
        if (command == "sweep") {
            return cmd_sweep(args, out);
        }
        if (command == "peak") {
            return cmd_peak(args, out);
        }
        if (command == "ratio") {
            return cmd_ratio(args, out);
        }
        if (command == "compare") {
            return cmd_compare(args, out);
        }
        err << "error: unknown command '" << command << "'\n";
        print_usage(err);
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        print_usage(err);
        return kExitUsage;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace scsigma
