#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "majconf/grid.hpp"
#include "majconf/params.hpp"

namespace majconf::cli {

/// Bad flags or config values; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Method { analytic, fd, shooting, all };
enum class Format { csv, json };

struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t points = 0;
};

/// "min:max:points"
GridSpec parse_grid_spec(const std::string& text);

/// Comma-separated numbers; blank entries are skipped. Throws ConfigError
/// on anything that is not a number.
std::vector<double> parse_b_values(const std::string& text);

struct RunConfig {
    double m = 0.0;
    double b = 1.0;
    int n_max = 6;
    std::optional<GridSpec> grid;
    Method method = Method::analytic;
    Format format = Format::csv;
    std::string out = "-";
    std::optional<double> tol;
    bool allow_narrow_grid = false;

    /// Throws ConfigError naming the violated constraint.
    void validate() const;

    PotentialParams params() const;

    /// Explicit grid, else r in [-10, 10] around -m/b with 4001 points.
    Grid working_grid() const;

    std::vector<Method> methods() const;

    /// key=value pairs in a fixed order, for output headers.
    std::string describe() const;
};

std::string to_string(Method method);
std::string to_string(Format format);

/// Fixed 12-significant-digit rendering; independent of the C locale.
std::string format_number(double value);

}  // namespace majconf::cli
