#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "majconf/numeric.hpp"

namespace majconf {

namespace {

struct State {
    double y;
    double dy;
};

// y'' = (r^2 - eps) y
State rk4_step(State s, double r, double h, double eps) {
    auto accel = [eps](double rr, double y) { return (rr * rr - eps) * y; };
    const double k1y = s.dy;
    const double k1v = accel(r, s.y);
    const double k2y = s.dy + 0.5 * h * k1v;
    const double k2v = accel(r + 0.5 * h, s.y + 0.5 * h * k1y);
    const double k3y = s.dy + 0.5 * h * k2v;
    const double k3v = accel(r + 0.5 * h, s.y + 0.5 * h * k2y);
    const double k4y = s.dy + h * k3v;
    const double k4v = accel(r + h, s.y + h * k3y);
    return {s.y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
            s.dy + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

// Log-derivative of |r|^nu exp(-r^2/2), nu = (eps - 1)/2.
State asymptotic_start(double r, double eps) {
    const double nu = 0.5 * (eps - 1.0);
    return {1.0, nu / r - r};
}

[[noreturn]] void overflow(double eps) {
    std::ostringstream os;
    os << "shooting integration overflowed for beta/b trial " << eps;
    throw std::overflow_error(os.str());
}

struct Sweep {
    std::vector<double> samples;  // y at each step, starting point first
    State end;
    double step;
};

// Fixed-step RK4 from `from` to `to` in `steps` equal steps.
Sweep integrate(double from, double to, std::size_t steps, double eps) {
    Sweep sweep;
    sweep.step = (to - from) / static_cast<double>(steps);
    sweep.samples.reserve(steps + 1);
    State s = asymptotic_start(from, eps);
    sweep.samples.push_back(s.y);
    for (std::size_t i = 0; i < steps; ++i) {
        s = rk4_step(s, from + static_cast<double>(i) * sweep.step, sweep.step, eps);
        if (!std::isfinite(s.y) || !std::isfinite(s.dy)) overflow(eps);
        sweep.samples.push_back(s.y);
    }
    sweep.end = s;
    return sweep;
}

std::size_t steps_to_origin(const Grid& r_grid, double from) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(from) / r_grid.spacing() - 1e-9)));
}

void require_trial(double eps) {
    if (!std::isfinite(eps) || !(eps > 0.0)) throw std::invalid_argument("beta/b trial must be positive");
}

void require_span(const Grid& r_grid) {
    if (!r_grid.covers(-kSupportHalfWidth, kSupportHalfWidth))
        throw std::invalid_argument("shooting grid must span r in [-8, 8]");
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

Grid default_shooting_grid() { return Grid(-10.0, 10.0, 8001); }

ShootingResult shoot_once(const PotentialParams& params, double eps, const Grid& r_grid) {
    (void)params;  // the oscillator form carries no parameters
    require_trial(eps);
    require_span(r_grid);

    const Sweep left = integrate(r_grid.x_min(), 0.0, steps_to_origin(r_grid, r_grid.x_min()), eps);
    const Sweep right = integrate(r_grid.x_max(), 0.0, steps_to_origin(r_grid, r_grid.x_max()), eps);
    const State l = left.end;
    const State r = right.end;

    ShootingResult result;
    result.beta_over_b = eps;
    result.bracket = {eps, eps};
    result.mismatch = (l.dy * r.y - l.y * r.dy) / (std::hypot(l.y, l.dy) * std::hypot(r.y, r.dy));

    // Node count of the matched function: nodes strictly inside each half,
    // plus one if the matched function changes sign across r = 0. Odd-like
    // solutions (a node within one step of the origin) are matched by slope.
    const std::span<const double> l_inner(left.samples.data(), left.samples.size() - 1);
    const std::span<const double> r_inner(right.samples.data(), right.samples.size() - 1);
    std::size_t nodes = count_sign_changes(l_inner) + count_sign_changes(r_inner);

    const bool odd_like = std::abs(l.y) < std::abs(l.dy) * std::abs(left.step);
    // right.dy is d/dr as well (the sweep runs with a negative step)
    const int match = odd_like ? sign_of(l.dy) * sign_of(r.dy) : sign_of(l.y) * sign_of(r.y);
    const double l_near = l_inner.back();
    const double r_near = r_inner.back();
    if (match != 0 && sign_of(l_near) * match * sign_of(r_near) < 0) ++nodes;

    result.node_count = static_cast<int>(nodes);
    return result;
}

std::size_t shooting_level_count(double eps, const Grid& r_grid) {
    require_trial(eps);
    require_span(r_grid);
    const Sweep sweep = integrate(r_grid.x_min(), r_grid.x_max(), r_grid.size() - 1, eps);
    // The sweep spans ~e^{R^2} in magnitude, so only exact zeros are skipped.
    return count_sign_changes(sweep.samples, 0.0);
}

ShootingResult find_eigen_shooting(const PotentialParams& params, int n, double tol, const Grid& r_grid) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const auto level = static_cast<std::size_t>(n);

    double lo = std::numeric_limits<double>::min();
    double hi = 4.0 * n + 8.0;
    if (shooting_level_count(lo, r_grid) > level || shooting_level_count(hi, r_grid) <= level)
        throw std::runtime_error("could not bracket level " + std::to_string(n) + " inside [0, " +
                                 std::to_string(4 * n + 8) + "]");

    // Isolate: exactly n levels below lo, n + 1 below hi.
    for (int guard = 0; guard < 200; ++guard) {
        if (shooting_level_count(lo, r_grid) == level && shooting_level_count(hi, r_grid) == level + 1)
            break;
        const double mid = 0.5 * (lo + hi);
        if (shooting_level_count(mid, r_grid) <= level)
            lo = mid;
        else
            hi = mid;
    }

    double f_lo = shoot_once(params, lo, r_grid).mismatch;
    const double f_hi = shoot_once(params, hi, r_grid).mismatch;
    const bool sign_bracket = sign_of(f_lo) * sign_of(f_hi) < 0;
    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        bool go_right;
        if (sign_bracket) {
            const double f_mid = shoot_once(params, mid, r_grid).mismatch;
            if (f_mid == 0.0) {
                lo = hi = mid;
                break;
            }
            go_right = sign_of(f_mid) == sign_of(f_lo);
            if (go_right) f_lo = f_mid;
        } else {
            go_right = shooting_level_count(mid, r_grid) <= level;
        }
        (go_right ? lo : hi) = mid;
    }

    ShootingResult result = shoot_once(params, 0.5 * (lo + hi), r_grid);
    result.bracket = {lo, hi};
    return result;
}

double shooting_energy(const PotentialParams& params, const ShootingResult& result) {
    return std::sqrt(std::max(0.0, params.slope() * (result.beta_over_b - 1.0)));
}

}  // namespace majconf
