#include "majconf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace majconf {

Grid::Grid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
        throw std::invalid_argument("grid requires x_min < x_max");
    if (n_points < 3) throw std::invalid_argument("grid requires at least 3 points");
    spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::points() const {
    std::vector<double> out(n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) out[i] = (*this)[i];
    return out;
}

bool Grid::covers(double lo, double hi) const {
    const double slack = 1e-12 * std::max({1.0, std::abs(x_min_), std::abs(x_max_)});
    return x_min_ <= lo + slack && hi - slack <= x_max_;
}

Grid centered_grid(const PotentialParams& params, double half_width_r, std::size_t n_points) {
    const double center = -params.origin_shift();
    const double half = half_width_r / std::sqrt(params.slope());
    return Grid(center - half, center + half, n_points);
}

Grid default_grid(const PotentialParams& params) { return centered_grid(params, 10.0, 4001); }

void require_support(const Grid& grid, const PotentialParams& params, double half_width_r) {
    const double center = -params.origin_shift();
    const double half = half_width_r / std::sqrt(params.slope());
    if (!grid.covers(center - half, center + half)) {
        std::ostringstream os;
        os << "grid [" << grid.x_min() << ", " << grid.x_max() << "] is too narrow: it must contain ["
           << center - half << ", " << center + half << "] (" << half_width_r
           << " oscillator lengths around -m/b)";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace majconf
