#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "majconf/grid.hpp"

namespace majconf {

/// Real symmetric tridiagonal matrix.
struct TridiagonalSym {
    std::vector<double> diag;
    std::vector<double> offdiag;  ///< size diag.size() - 1

    std::size_t dimension() const { return diag.size(); }

    /// Throws std::invalid_argument on a shape mismatch or empty matrix.
    void validate() const;
};

/// Number of eigenvalues strictly below shift, from the signs of the LDL^T
/// pivots of (A - shift I).
std::size_t sturm_count(const TridiagonalSym& a, double shift);

/// [min_i (d_i - |e_{i-1}| - |e_i|), max_i (d_i + |e_{i-1}| + |e_i|)]
std::pair<double, double> gershgorin_bounds(const TridiagonalSym& a);

struct EigenResult {
    std::vector<double> values;            ///< ascending
    std::vector<int> iterations;           ///< bisection steps per value
    double residual_bound = 0.0;           ///< largest final half-bracket
    std::optional<Grid> grid;              ///< set when built from a discretization
};

/// Worker count from MAJ_CONFINE_THREADS, else hardware concurrency (>= 1).
unsigned default_thread_count();

/// The k smallest eigenvalues by Sturm-count bisection, each refined until
/// its bracket is narrower than tol. Results do not depend on threads.
/// Throws std::invalid_argument for k outside [1, dimension] or tol <= 0.
EigenResult eigen_lowest_k(const TridiagonalSym& a, std::size_t k, double tol = 1e-12,
                           unsigned threads = 0);

}  // namespace majconf
