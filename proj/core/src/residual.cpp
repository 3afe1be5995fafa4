#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "majconf/algebra.hpp"
#include "majconf/analytic.hpp"
#include "majconf/numeric.hpp"

namespace majconf {

namespace {

using cplx = std::complex<double>;

// Fourth-order central first derivative at interior index i (2 <= i <= n-3).
cplx d4(const std::vector<cplx>& f, std::size_t i, double h) {
    return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}

}  // namespace

double residual_coupled(const SpinorField& field, double energy, const PotentialParams& params) {
    const std::size_t n = field.grid.size();
    if (n < 5) throw std::invalid_argument("coupled residual needs at least 5 grid points");
    if (field.upper.size() != n || field.lower.size() != n)
        throw std::invalid_argument("spinor components do not match the grid");

    const double h = field.grid.spacing();
    const cplx i_unit{0.0, 1.0};
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double w = params.scalar_potential(field.grid[i]);
        const cplx phi = field.upper[i];
        const cplx chi = field.lower[i];
        const cplx first = energy * phi - i_unit * (d4(field.lower, i, h) - w * chi);
        const cplx second = energy * chi - i_unit * (d4(field.upper, i, h) + w * phi);
        worst = std::max({worst, std::abs(first), std::abs(second)});
    }
    return worst;
}

double residual_time_domain(const Mode& mode, int t_steps, double dt, const Grid& grid) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (t_steps < 2) throw std::invalid_argument("time-domain residual needs at least 2 steps");

    const RealOperatorBlocks op = real_operator_blocks(build_gamma_majorana());
    const std::size_t n = grid.size();
    const double h = grid.spacing();

    RealField before = real_majorana_field(mode, 0.0, grid);
    RealField now = real_majorana_field(mode, dt, grid);
    double worst = 0.0;
    for (int k = 1; k < t_steps; ++k) {
        RealField after = real_majorana_field(mode, static_cast<double>(k + 1) * dt, grid);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double w = mode.params.scalar_potential(grid[i]);
            const double dt_u = (after.upper[i] - before.upper[i]) / (2.0 * dt);
            const double dt_v = (after.lower[i] - before.lower[i]) / (2.0 * dt);
            const double dx_u = (now.upper[i + 1] - now.upper[i - 1]) / (2.0 * h);
            const double dx_v = (now.lower[i + 1] - now.lower[i - 1]) / (2.0 * h);
            for (int row = 0; row < 2; ++row) {
                const double value = op.time[row][0] * dt_u + op.time[row][1] * dt_v +
                                     op.space[row][0] * dx_u + op.space[row][1] * dx_v -
                                     w * (row == 0 ? now.upper[i] : now.lower[i]);
                worst = std::max(worst, std::abs(value));
            }
        }
        before = std::move(now);
        now = std::move(after);
    }
    return worst;
}

}  // namespace majconf
