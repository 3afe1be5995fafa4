#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "majconf/analytic.hpp"
#include "majconf/numeric.hpp"
#include "majconf/validate.hpp"

#ifndef MAJ_CONFINE_VERSION
#define MAJ_CONFINE_VERSION "unknown"
#endif

namespace majconf::cli {

namespace {

constexpr double kFdTolerance = 5e-4;
constexpr double kShootingTolerance = 1e-6;
constexpr double kShootingBisection = 1e-13;

using nlohmann::ordered_json;

std::string num(double v) { return format_number(v); }

/// E_0^+ .. E_{count-1}^+ for one method.
std::vector<double> positive_levels(Method method, const PotentialParams& params, const Grid& grid, int count) {
    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(count));
    switch (method) {
        case Method::analytic:
            for (int n = 0; n < count; ++n) levels.push_back(energy_level(n, params.slope(), +1));
            break;
        case Method::fd:
            levels = spectrum_fd(params, grid, static_cast<std::size_t>(count));
            break;
        case Method::shooting:
            for (int n = 0; n < count; ++n)
                levels.push_back(shooting_energy(params, find_eigen_shooting(params, n, kShootingBisection)));
            break;
        case Method::all:
            throw std::logic_error("method 'all' must be expanded before evaluation");
    }
    return levels;
}

std::string tolerance_line(const RunConfig& config) {
    if (config.tol) return fmt::format("# tolerance: {} (absolute; energy for fd, beta/b for shooting)\n", num(*config.tol));
    return fmt::format("# tolerance: fd={} (absolute, energy) shooting={} (absolute, beta/b)\n", num(kFdTolerance),
                       num(kShootingTolerance));
}

ordered_json header_json(const RunConfig& config, const std::string& command) {
    const Grid g = config.working_grid();
    ordered_json cfg;
    cfg["m"] = num(config.m);
    cfg["b"] = num(config.b);
    cfg["n_max"] = config.n_max;
    cfg["method"] = to_string(config.method);
    cfg["grid"] = {{"x_min", num(g.x_min())}, {"x_max", num(g.x_max())}, {"points", g.size()}};
    cfg["format"] = to_string(config.format);
    cfg["tol"] = config.tol ? ordered_json(num(*config.tol)) : ordered_json(nullptr);
    cfg["allow_narrow_grid"] = config.allow_narrow_grid;

    ordered_json header;
    header["program"] = "maj-confine";
    header["version"] = MAJ_CONFINE_VERSION;
    header["command"] = command;
    header["config"] = cfg;
    header["units"] = "c = hbar = 1";
    return header;
}

}  // namespace

std::string header_block(const RunConfig& config, const std::string& command) {
    return fmt::format("# maj-confine {}\n# command: {}\n# config: {}\n# units: c = hbar = 1\n", MAJ_CONFINE_VERSION,
                       command, config.describe());
}

CommandResult cmd_spectrum(const RunConfig& config) {
    const PotentialParams params = config.params();
    const Grid grid = config.working_grid();
    const int rows = config.n_max + 1;

    struct Row {
        Method method;
        int n;
        double plus, minus, spacing;
    };
    std::vector<Row> table;
    for (const Method method : config.methods()) {
        // One extra level so the last row has a spacing.
        const auto levels = positive_levels(method, params, grid, rows + 1);
        for (int n = 0; n < rows; ++n) {
            const double e = levels[static_cast<std::size_t>(n)];
            table.push_back({method, n, e, -e, levels[static_cast<std::size_t>(n) + 1] - e});
        }
    }

    CommandResult result;
    if (config.format == Format::csv) {
        std::string out = header_block(config, "spectrum") + tolerance_line(config);
        out += "method,n,energy_plus,energy_minus,spacing_to_next\n";
        for (const auto& r : table)
            out += fmt::format("{},{},{},{},{}\n", to_string(r.method), r.n, num(r.plus), num(r.minus), num(r.spacing));
        result.text = std::move(out);
    } else {
        ordered_json doc = header_json(config, "spectrum");
        doc["tolerance"] = config.tol ? ordered_json{{"all", num(*config.tol)}}
                                      : ordered_json{{"fd", num(kFdTolerance)}, {"shooting", num(kShootingTolerance)}};
        doc["rows"] = ordered_json::array();
        for (const auto& r : table)
            doc["rows"].push_back({{"method", to_string(r.method)},
                                   {"n", r.n},
                                   {"energy_plus", num(r.plus)},
                                   {"energy_minus", num(r.minus)},
                                   {"spacing_to_next", num(r.spacing)}});
        result.text = doc.dump(2) + "\n";
    }
    return result;
}

CommandResult cmd_modes(const RunConfig& config, int n, int sign) {
    if (n < 0 || n > config.n_max)
        throw ConfigError(fmt::format("n must satisfy 0 <= n <= n-max ({}), got {}", config.n_max, n));
    if (sign != 1 && sign != -1) throw ConfigError("sign must be +1 or -1");

    const PotentialParams params = config.params();
    const Grid grid = config.working_grid();
    const Mode mode = make_mode(params, n, sign);
    const SpinorField field = sample_mode(mode, grid);

    std::vector<double> density(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        density[i] = std::norm(field.upper[i]) + std::norm(field.lower[i]);
    double norm = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) norm += 0.5 * (density[i] + density[i + 1]);
    norm *= grid.spacing();

    CommandResult result;
    if (config.format == Format::csv) {
        std::string out = header_block(config, "modes");
        out += fmt::format("# mode: n={} sign={} energy={} x0={}\n", n, sign, num(mode.energy),
                           num(params.origin_shift()));
        out += fmt::format("# norm: {} (trapezoid of abs_psi_sq over the grid)\n", num(norm));
        out += "x,r,phi,chi_real,chi_imag,abs_psi_sq\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double x = grid[i];
            out += fmt::format("{},{},{},{},{},{}\n", num(x), num(to_oscillator_coordinate(params, x)),
                               num(field.upper[i].real()), num(field.lower[i].real()), num(field.lower[i].imag()),
                               num(density[i]));
        }
        result.text = std::move(out);
    } else {
        ordered_json doc = header_json(config, "modes");
        doc["mode"] = {{"n", n}, {"sign", sign}, {"energy", num(mode.energy)}, {"x0", num(params.origin_shift())}};
        doc["norm"] = num(norm);
        ordered_json cols = {{"x", ordered_json::array()},         {"r", ordered_json::array()},
                             {"phi", ordered_json::array()},       {"chi_real", ordered_json::array()},
                             {"chi_imag", ordered_json::array()}, {"abs_psi_sq", ordered_json::array()}};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            cols["x"].push_back(num(grid[i]));
            cols["r"].push_back(num(to_oscillator_coordinate(params, grid[i])));
            cols["phi"].push_back(num(field.upper[i].real()));
            cols["chi_real"].push_back(num(field.lower[i].real()));
            cols["chi_imag"].push_back(num(field.lower[i].imag()));
            cols["abs_psi_sq"].push_back(num(density[i]));
        }
        doc["columns"] = std::move(cols);
        result.text = doc.dump(2) + "\n";
    }
    return result;
}

CommandResult cmd_validate(const RunConfig& config, std::string& table) {
    ValidationConfig vc;
    vc.n_max = config.n_max;
    vc.tol = config.tol;
    if (config.grid) vc.grid = config.working_grid();

    const auto reports = run_all(config.params(), vc);
    table = format_table(reports);

    CommandResult result;
    result.text = header_block(config, "validate");
    for (const auto& report : reports) result.text += to_json_line(report) + "\n";
    result.exit_code = all_passed(reports) ? kSuccess : kValidationFailure;
    return result;
}

CommandResult cmd_sweep(const RunConfig& config, const std::vector<double>& b_values) {
    if (b_values.empty()) throw ConfigError("b-values must list at least one b");
    for (const double b : b_values)
        if (!std::isfinite(b) || !(b > 0.0)) throw ConfigError(fmt::format("b must be positive (got {})", num(b)));

    struct Row {
        Method method;
        double b;
        int n;
        double energy, collapsed;
    };
    std::vector<Row> table;
    for (const Method method : config.methods()) {
        for (const double b : b_values) {
            RunConfig per_b = config;
            per_b.b = b;
            per_b.validate();
            const auto levels = positive_levels(method, per_b.params(), per_b.working_grid(), config.n_max + 1);
            for (int n = 0; n <= config.n_max; ++n) {
                const double e = levels[static_cast<std::size_t>(n)];
                table.push_back({method, b, n, e, e / std::sqrt(b)});
            }
        }
    }

    std::string b_list;
    for (std::size_t i = 0; i < b_values.size(); ++i) b_list += (i ? "," : "") + num(b_values[i]);

    CommandResult result;
    if (config.format == Format::csv) {
        std::string out = header_block(config, "sweep");
        out += fmt::format("# b_values: {}\n", b_list);
        out += "# energy_over_sqrt_b = E_n / sqrt(b) = sqrt(2 n) for every b\n";
        out += "method,b,n,energy,energy_over_sqrt_b\n";
        for (const auto& r : table)
            out += fmt::format("{},{},{},{},{}\n", to_string(r.method), num(r.b), r.n, num(r.energy),
                               num(r.collapsed));
        result.text = std::move(out);
    } else {
        ordered_json doc = header_json(config, "sweep");
        doc["b_values"] = b_list;
        doc["rows"] = ordered_json::array();
        for (const auto& r : table)
            doc["rows"].push_back({{"method", to_string(r.method)},
                                   {"b", num(r.b)},
                                   {"n", r.n},
                                   {"energy", num(r.energy)},
                                   {"energy_over_sqrt_b", num(r.collapsed)}});
        result.text = doc.dump(2) + "\n";
    }
    return result;
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot open output file '" + path + "'");
    file << text;
    if (!file.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace majconf::cli
