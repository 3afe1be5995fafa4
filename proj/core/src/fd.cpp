#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "majconf/numeric.hpp"

namespace majconf {

std::size_t count_sign_changes(std::span<const double> samples, double deadband) {
    double scale = 0.0;
    for (double v : samples) scale = std::max(scale, std::abs(v));
    const double floor = deadband * scale;
    std::size_t changes = 0;
    int previous = 0;
    for (double v : samples) {
        if (std::abs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

TridiagonalSym build_fd_hamiltonian(const PotentialParams& params, const Grid& grid) {
    require_support(grid, params);
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    const double b = params.slope();
    const double x0 = params.origin_shift();
    const std::size_t unknowns = grid.size() - 2;

    TridiagonalSym a;
    a.diag.resize(unknowns);
    a.offdiag.assign(unknowns - 1, -inv_h2);
    for (std::size_t i = 0; i < unknowns; ++i) {
        const double shifted = grid[i + 1] + x0;
        a.diag[i] = 2.0 * inv_h2 + b * b * shifted * shifted;
    }
    return a;
}

EigenResult fd_eigenvalues(const PotentialParams& params, const Grid& grid, std::size_t k, double tol) {
    EigenResult result = eigen_lowest_k(build_fd_hamiltonian(params, grid), k, tol);
    result.grid = grid;
    return result;
}

std::vector<double> spectrum_fd(const PotentialParams& params, const Grid& grid, std::size_t k,
                                double tol) {
    const EigenResult eig = fd_eigenvalues(params, grid, k, tol);
    const double b = params.slope();
    std::vector<double> energies;
    energies.reserve(k);
    for (std::size_t n = 0; n < eig.values.size(); ++n) {
        const double e2 = eig.values[n] - b;
        if (e2 < 0.0) {
            if (n == 0) {
                energies.push_back(0.0);
                continue;
            }
            throw std::runtime_error("lambda_" + std::to_string(n) +
                                     " - b is negative; grid too coarse to resolve the level");
        }
        energies.push_back(std::sqrt(e2));
    }
    return energies;
}

}  // namespace majconf
