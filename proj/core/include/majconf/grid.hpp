#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "majconf/params.hpp"

namespace majconf {

/// Uniform grid x_i = x_min + i h, i = 0 .. n_points - 1.
class Grid {
public:
    /// Throws std::invalid_argument unless x_min < x_max and n_points >= 3.
    Grid(double x_min, double x_max, std::size_t n_points);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return n_points_; }
    double spacing() const { return spacing_; }

    double operator[](std::size_t i) const { return x_min_ + static_cast<double>(i) * spacing_; }
    std::vector<double> points() const;

    /// True when [lo, hi] lies inside the grid (with rounding slack).
    bool covers(double lo, double hi) const;

private:
    double x_min_;
    double x_max_;
    std::size_t n_points_;
    double spacing_;
};

/// Oscillator-coordinate half-width every eigenproblem grid must reach.
inline constexpr double kSupportHalfWidth = 8.0;

/// Grid on x in [-x0 - W/sqrt(b), -x0 + W/sqrt(b)], i.e. r in [-W, W].
Grid centered_grid(const PotentialParams& params, double half_width_r, std::size_t n_points);

/// Default working grid: r in [-10, 10], 4001 points.
Grid default_grid(const PotentialParams& params);

/// Throws std::invalid_argument when the grid misses part of
/// [-x0 - R/sqrt(b), -x0 + R/sqrt(b)].
void require_support(const Grid& grid, const PotentialParams& params,
                     double half_width_r = kSupportHalfWidth);

/// Complex two-component field on a grid.
struct SpinorField {
    Grid grid;
    std::vector<std::complex<double>> upper;
    std::vector<std::complex<double>> lower;
};

/// Real two-component field on a grid.
struct RealField {
    Grid grid;
    std::vector<double> upper;
    std::vector<double> lower;
};

}  // namespace majconf
