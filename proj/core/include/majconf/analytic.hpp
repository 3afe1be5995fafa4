#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "majconf/grid.hpp"
#include "majconf/params.hpp"

namespace majconf {

using Rational = boost::multiprecision::cpp_rational;

// Closed-form bound states of the linearly confined Majorana fermion.
//
// With r = sqrt(b) (x + m/b) the upper component obeys the oscillator
// equation phi'' - r^2 phi + (beta/b) phi = 0, beta = E^2 + b. Writing
// phi = exp(-r^2/2) F(r), the power series of F terminates iff
// beta/b = 2n + 1, which gives E_n = +-sqrt(2 n b), independent of m.

/// sign * sqrt(2 n b). Throws std::invalid_argument for b <= 0, n < 0 or
/// sign not in {-1, +1}.
double energy_level(int n, double b, int sign = +1);

/// E_{n+1} - E_n = sqrt(2(n+1)b) - sqrt(2nb).
double level_spacing(int n, double b);

/// beta/b = 2n + 1 at which the series for F terminates.
double quantization_ratio(int n);

/// beta = E^2 + b, the eigenvalue of -d^2/dx^2 + b^2 (x + x0)^2.
inline double beta_from_energy(double energy, double b) { return energy * energy + b; }

enum class Parity { even, odd };

/// Terminating coefficients a_0 .. a_n of F(r) = sum a_k r^k.
struct CoefficientSeries {
    int degree = 0;
    Parity parity = Parity::even;
    std::vector<Rational> exact;   ///< a_0 .. a_n, exact
    std::vector<double> values;    ///< a_0 .. a_n, rounded

    /// a_k for any k >= 0 (zero past the degree).
    Rational coefficient(int k) const;

    /// a_{n+2} as produced by the recurrence itself; exactly zero.
    Rational next_after_degree() const;
};

/// a_{k+2} = (2k + 1 - beta/b) / ((k+2)(k+1)) a_k with beta/b = 2n + 1.
Rational recurrence_factor(int k, int n);

/// Seeds a_0 = 1 (n even) or a_1 = 1 (n odd) and runs the recurrence.
CoefficientSeries hermite_coeffs(int n);

double eval_F(const CoefficientSeries& series, double r);
double eval_F_derivative(const CoefficientSeries& series, double r);

/// r = sqrt(b) (x + m/b)
double to_oscillator_coordinate(const PotentialParams& params, double x);

/// One bound state psi = exp(-i E t) (phi, chi).
///
/// phi(x) = phase * norm_constant * exp(-r^2/2) F(r), with phase = sgn(a_n)
/// so phi is positive in the r -> +inf tail. The lower component follows
/// from E chi = i (d/dx + m + b x) phi; for n = 0 (E = 0) chi is zero, the
/// only normalizable choice.
struct Mode {
    int n = 0;
    int sign = +1;
    double energy = 0.0;
    PotentialParams params{0.0, 1.0};
    CoefficientSeries series;
    double norm_constant = 1.0;
    int phase = +1;
};

/// Unnormalized mode (norm_constant = 1).
Mode build_mode(const PotentialParams& params, int n, int sign = +1);

/// Quadrature used for normalization, in oscillator units.
struct QuadratureSpec {
    double half_width_r = 12.0;
    std::size_t points = 4001;
};

/// Rescales norm_constant so that int (|phi|^2 + |chi|^2) dx = 1.
/// Throws std::invalid_argument if the quadrature range is narrower than
/// r in [-10, 10] or the mode has zero norm.
Mode normalize_mode(Mode mode, const QuadratureSpec& quad = {});

/// build_mode followed by normalize_mode.
Mode make_mode(const PotentialParams& params, int n, int sign = +1);

double phi_value(const Mode& mode, double x);
double phi_derivative(const Mode& mode, double x);
std::complex<double> chi_value(const Mode& mode, double x);
/// d chi / dx, closed form.
std::complex<double> chi_derivative(const Mode& mode, double x);

SpinorField sample_mode(const Mode& mode, const Grid& grid);

/// Re[exp(-i E t) (phi, chi)] on the grid. i gamma^mu is real in the
/// Majorana representation, so this real field solves the field equation.
RealField real_majorana_field(const Mode& mode, double t, const Grid& grid);

}  // namespace majconf
