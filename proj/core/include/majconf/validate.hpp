#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "majconf/analytic.hpp"
#include "majconf/grid.hpp"
#include "majconf/params.hpp"

namespace majconf {

enum class CheckKind { algebraic, numerical };

struct ValidationReport {
    std::string check_name;
    CheckKind kind = CheckKind::numerical;
    bool passed = false;
    std::vector<double> observed;
    std::vector<double> expected;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    double runtime_seconds = 0.0;
    std::string detail;
};

/// Tolerances for run_all. When `tol` is set it replaces every numerical
/// tolerance; algebraic checks (including the two mass checks, whose
/// deviations are pure round-off) keep their own.
struct ValidationConfig {
    int n_max = 6;
    std::optional<double> tol;
    double algebra_tol = 1e-12;
    double spectrum_tol = 5e-4;
    double translation_tol = 1e-10;
    double residual_tol = 1e-6;
    double time_residual_tol = 1e-4;
    double orthonormality_tol = 1e-8;
    double susy_tol = 1e-8;
    /// Mass used for the translation check when params.mass() is zero.
    double probe_mass = 1.0;
    std::optional<Grid> grid;
    unsigned threads = 0;
};

ValidationReport check_clifford_algebra(double tol = 1e-12);
ValidationReport check_majorana_reality(double tol = 1e-12);

/// a_{n+2} == 0 exactly for every n <= n_max.
ValidationReport check_series_termination(int n_max = 50);

/// Analytic levels against the finite-difference and shooting spectra,
/// both as energies, for n <= n_max. Throws std::invalid_argument for n_max < 1.
ValidationReport check_spectrum_agreement(const PotentialParams& params, int n_max, double tol,
                                          const std::optional<Grid>& grid = std::nullopt);

/// E_n^+ + E_n^- == 0 for all n <= n_max and E_0 == 0.
ValidationReport check_no_gap(const PotentialParams& params, int n_max);

/// Spacings strictly decreasing and equal to sqrt(2(n+1)b) - sqrt(2nb) to 1e-12.
/// Throws std::invalid_argument for n_max < 2.
ValidationReport check_unequal_spacing(double b, int n_max);

/// Strictly decreasing spacings for an arbitrary ascending level list.
ValidationReport check_unequal_spacing_levels(std::span<const double> levels);

/// Analytic spectrum bit-identical for m and 0; finite-difference spectra
/// on grids translated by x0 agree within tol.
ValidationReport check_mass_independence(const PotentialParams& params, int n_max, double tol);

/// phi_n with mass m equals the massless phi_n at x + m/b, n <= 4.
ValidationReport check_mass_translation(double m, double b, double tol);

/// Gram matrix of the modes (n <= n_max, both signs) against the identity.
ValidationReport check_orthonormality(const PotentialParams& params, int n_max, double tol);
ValidationReport check_orthonormality(std::span<const Mode> modes, double tol);

/// Overlap of normalized |chi_n| with phi_{n-1}. Throws std::invalid_argument for n < 1.
ValidationReport check_susy_partner(const PotentialParams& params, int n, double tol);

/// E_0 == 0, chi_0 == 0 and the zero mode's coupled residual below tol.
ValidationReport check_zero_mode(const PotentialParams& params, double tol,
                                 const std::optional<Grid>& grid = std::nullopt);

/// Coupled first-order residual for every analytic mode n <= n_max.
ValidationReport check_coupled_residual(const PotentialParams& params, int n_max, double tol,
                                        const std::optional<Grid>& grid = std::nullopt);

/// Time-domain residual of the real n = 1 field below tol, with an observed
/// convergence ratio in [3, 5] when dt and h are halved.
ValidationReport check_time_domain_residual(const PotentialParams& params, double tol);

/// Names of every check run_all executes, in report order.
std::vector<std::string> registered_checks();

struct ClaimMapping {
    std::string claim;
    std::string check_name;
};

/// Each quantitative claim about the spectrum and wavefunctions, with the
/// check that verifies it.
std::vector<ClaimMapping> claim_map();

/// Runs every registered check. Reports come back in registered_checks()
/// order regardless of execution order.
std::vector<ValidationReport> run_all(const PotentialParams& params, const ValidationConfig& config = {});

bool all_passed(std::span<const ValidationReport> reports);

/// One JSON object per line.
std::string to_json_line(const ValidationReport& report);

/// Fixed-width human-readable summary table.
std::string format_table(std::span<const ValidationReport> reports);

}  // namespace majconf
