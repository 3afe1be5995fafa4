#include "run_config.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace majconf::cli {

namespace {

double parse_double(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ConfigError(what + " is not a number: '" + text + "'");
    return value;
}

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    return text.substr(first, text.find_last_not_of(" \t") - first + 1);
}

}  // namespace

std::vector<double> parse_b_values(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find(',', start);
        if (stop == std::string::npos) stop = text.size();
        const std::string item = trim(text.substr(start, stop - start));
        if (!item.empty()) values.push_back(parse_double(item, "b-values entry"));
        start = stop + 1;
    }
    return values;
}

GridSpec parse_grid_spec(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw ConfigError("grid must be given as min:max:points, got '" + text + "'");

    GridSpec spec;
    spec.x_min = parse_double(text.substr(0, first), "grid min");
    spec.x_max = parse_double(text.substr(first + 1, second - first - 1), "grid max");
    const std::string points = text.substr(second + 1);
    std::size_t count = 0;
    const auto [ptr, ec] = std::from_chars(points.data(), points.data() + points.size(), count);
    if (ec != std::errc() || ptr != points.data() + points.size())
        throw ConfigError("grid points is not a positive integer: '" + points + "'");
    spec.points = count;
    return spec;
}

void RunConfig::validate() const {
    if (!std::isfinite(b) || !(b > 0.0)) throw ConfigError("b must be positive");
    if (!std::isfinite(m)) throw ConfigError("m must be finite");
    if (n_max < 0) throw ConfigError("n-max must be non-negative");
    if (tol && !(*tol >= 0.0)) throw ConfigError("tol must be non-negative");
    if (grid) {
        if (!(grid->x_min < grid->x_max)) throw ConfigError("grid requires min < max");
        if (grid->points < 3) throw ConfigError("grid requires at least 3 points");
        if (!allow_narrow_grid) {
            try {
                require_support(working_grid(), params());
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string(e.what()) + "; pass --allow-narrow-grid to override");
            }
        }
    }
}

PotentialParams RunConfig::params() const { return PotentialParams(m, b); }

Grid RunConfig::working_grid() const {
    if (grid) return Grid(grid->x_min, grid->x_max, grid->points);
    return default_grid(params());
}

std::vector<Method> RunConfig::methods() const {
    if (method == Method::all) return {Method::analytic, Method::fd, Method::shooting};
    return {method};
}

std::string to_string(Method method) {
    switch (method) {
        case Method::analytic: return "analytic";
        case Method::fd: return "fd";
        case Method::shooting: return "shooting";
        case Method::all: return "all";
    }
    return "?";
}

std::string to_string(Format format) { return format == Format::csv ? "csv" : "json"; }

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    return fmt::format("{:.12g}", value);
}

std::string RunConfig::describe() const {
    const Grid g = working_grid();
    return fmt::format("m={} b={} n_max={} method={} grid={}:{}:{} format={} tol={} allow_narrow_grid={}",
                       format_number(m), format_number(b), n_max, to_string(method), format_number(g.x_min()),
                       format_number(g.x_max()), g.size(), to_string(format),
                       tol ? format_number(*tol) : std::string("default"), allow_narrow_grid ? "true" : "false");
}

}  // namespace majconf::cli
