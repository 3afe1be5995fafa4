#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "majconf/grid.hpp"
#include "majconf/params.hpp"
#include "majconf/tridiagonal.hpp"

namespace majconf {

struct Mode;

// Numerical re-derivation of the spectrum. Nothing here consults the closed
// form: the finite-difference and shooting routines work from the decoupled
// second-order equation alone,
//
//   -phi'' + b^2 (x + x0)^2 phi = lambda phi,   lambda = E^2 + b,
//
// or, in r = sqrt(b)(x + x0), phi'' - r^2 phi + (beta/b) phi = 0.

/// Sign changes of a sampled function. Samples with |f| <= deadband * max|f|
/// are skipped.
std::size_t count_sign_changes(std::span<const double> samples, double deadband = 1e-12);

/// Central differences with Dirichlet ends on the interior grid points:
/// diag_i = 2/h^2 + b^2 (x_i + x0)^2, offdiag_i = -1/h^2.
/// Throws std::invalid_argument when the grid misses the support window.
TridiagonalSym build_fd_hamiltonian(const PotentialParams& params, const Grid& grid);

/// Lowest k eigenvalues lambda_n of the discretized operator.
EigenResult fd_eigenvalues(const PotentialParams& params, const Grid& grid, std::size_t k,
                           double tol = 1e-12);

/// E_n = sqrt(lambda_n - b), n = 0 .. k-1. Only the ground state is clamped
/// at zero; a negative lambda_n - b for n >= 1 throws std::runtime_error.
std::vector<double> spectrum_fd(const PotentialParams& params, const Grid& grid, std::size_t k,
                                double tol = 1e-12);

struct ShootingResult {
    double beta_over_b = 0.0;
    int node_count = 0;
    /// Wronskian mismatch of the two inward solutions at r = 0, normalised by
    /// their phase-space norms; zero exactly at an eigenvalue.
    double mismatch = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
};

/// r in [-10, 10] with 8001 points.
Grid default_shooting_grid();

/// Integrates the oscillator equation inward from both ends of the r-grid
/// with decaying asymptotic data (fixed-step RK4) and matches at r = 0.
/// Throws std::invalid_argument for a non-positive trial or a grid not
/// spanning [-8, 8]; std::overflow_error (naming the trial) if the
/// integration leaves the double range.
ShootingResult shoot_once(const PotentialParams& params, double beta_over_b_trial,
                          const Grid& r_grid = default_shooting_grid());

/// Number of oscillator levels below the trial: zeros of the solution
/// integrated left to right across the whole r-grid.
std::size_t shooting_level_count(double beta_over_b_trial, const Grid& r_grid = default_shooting_grid());

/// Isolates level n by level count, then bisects on the mismatch sign until
/// the bracket is narrower than tol. Throws std::runtime_error when the
/// level is not bracketed inside [0, 4n + 8].
ShootingResult find_eigen_shooting(const PotentialParams& params, int n, double tol = 1e-10,
                                   const Grid& r_grid = default_shooting_grid());

/// sqrt(b (beta/b - 1)), clamped at zero.
double shooting_energy(const PotentialParams& params, const ShootingResult& result);

/// Max over interior points of |E phi - i(chi' - (m+bx) chi)| and
/// |E chi - i(phi' + (m+bx) phi)| with fourth-order central differences.
/// Throws std::invalid_argument for fewer than 5 points.
double residual_coupled(const SpinorField& field, double energy, const PotentialParams& params);

/// Max-norm residual of the real field equation
/// (i gamma^0) d_t psi + (i gamma^1) d_x psi - (m + b x) psi = 0 for the real
/// field of mode, sampled at t = 0, dt, ..., t_steps dt, with second-order
/// central differences in t and x. Throws std::invalid_argument for dt <= 0
/// or t_steps < 2.
double residual_time_domain(const Mode& mode, int t_steps, double dt, const Grid& grid);

}  // namespace majconf
