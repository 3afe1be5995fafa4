#include "majconf/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "majconf/quadrature.hpp"

namespace majconf {

namespace {

void require_level(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative, got " + std::to_string(n));
}

void require_slope(double b) {
    if (!std::isfinite(b) || !(b > 0.0)) throw std::invalid_argument("b must be positive");
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace

double energy_level(int n, double b, int sign) {
    require_level(n);
    require_slope(b);
    require_sign(sign);
    return static_cast<double>(sign) * std::sqrt(2.0 * static_cast<double>(n) * b);
}

double level_spacing(int n, double b) {
    return energy_level(n + 1, b, +1) - energy_level(n, b, +1);
}

double quantization_ratio(int n) {
    require_level(n);
    return 2.0 * static_cast<double>(n) + 1.0;
}

Rational recurrence_factor(int k, int n) {
    const Rational beta_over_b = 2 * n + 1;
    return (Rational(2 * k + 1) - beta_over_b) / Rational((k + 2) * (k + 1));
}

Rational CoefficientSeries::coefficient(int k) const {
    if (k < 0 || k > degree) return Rational(0);
    return exact[static_cast<std::size_t>(k)];
}

Rational CoefficientSeries::next_after_degree() const {
    return recurrence_factor(degree, degree) * coefficient(degree);
}

CoefficientSeries hermite_coeffs(int n) {
    require_level(n);
    CoefficientSeries s;
    s.degree = n;
    s.parity = n % 2 == 0 ? Parity::even : Parity::odd;
    s.exact.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    const int seed = n % 2;
    s.exact[static_cast<std::size_t>(seed)] = 1;
    for (int k = seed; k + 2 <= n; k += 2)
        s.exact[static_cast<std::size_t>(k + 2)] =
            recurrence_factor(k, n) * s.exact[static_cast<std::size_t>(k)];
    s.values.reserve(s.exact.size());
    for (const auto& a : s.exact) s.values.push_back(static_cast<double>(a));
    return s;
}

double eval_F(const CoefficientSeries& series, double r) {
    // Horner in r^2 over the same-parity coefficients.
    const double r2 = r * r;
    double acc = 0.0;
    for (int k = series.degree; k >= 0; k -= 2) acc = acc * r2 + series.values[static_cast<std::size_t>(k)];
    return series.parity == Parity::odd ? acc * r : acc;
}

double eval_F_derivative(const CoefficientSeries& series, double r) {
    double acc = 0.0;
    for (int k = series.degree; k >= 1; --k)
        acc = acc * r + static_cast<double>(k) * series.values[static_cast<std::size_t>(k)];
    return acc;
}

namespace {

double eval_F_second_derivative(const CoefficientSeries& series, double r) {
    double acc = 0.0;
    for (int k = series.degree; k >= 2; --k)
        acc = acc * r + static_cast<double>(k * (k - 1)) * series.values[static_cast<std::size_t>(k)];
    return acc;
}

}  // namespace

double to_oscillator_coordinate(const PotentialParams& params, double x) {
    return std::sqrt(params.slope()) * (x + params.origin_shift());
}

Mode build_mode(const PotentialParams& params, int n, int sign) {
    Mode mode;
    mode.n = n;
    mode.sign = sign;
    mode.energy = energy_level(n, params.slope(), sign);
    mode.params = params;
    mode.series = hermite_coeffs(n);
    mode.norm_constant = 1.0;
    mode.phase = mode.series.values.back() > 0.0 ? +1 : -1;
    return mode;
}

Mode normalize_mode(Mode mode, const QuadratureSpec& quad) {
    if (!(quad.half_width_r >= 10.0))
        throw std::invalid_argument("normalization quadrature must cover r in [-10, 10]");
    const Grid grid = centered_grid(mode.params, quad.half_width_r, quad.points);
    const double norm = quadrature_norm(sample_mode(mode, grid));
    if (!std::isfinite(norm) || !(norm > 0.0)) throw std::invalid_argument("mode has zero norm");
    mode.norm_constant /= std::sqrt(norm);
    return mode;
}

Mode make_mode(const PotentialParams& params, int n, int sign) {
    return normalize_mode(build_mode(params, n, sign));
}

double phi_value(const Mode& mode, double x) {
    const double r = to_oscillator_coordinate(mode.params, x);
    return mode.phase * mode.norm_constant * std::exp(-0.5 * r * r) * eval_F(mode.series, r);
}

double phi_derivative(const Mode& mode, double x) {
    const double r = to_oscillator_coordinate(mode.params, x);
    const double dF = eval_F_derivative(mode.series, r);
    const double F = eval_F(mode.series, r);
    return std::sqrt(mode.params.slope()) * mode.phase * mode.norm_constant * std::exp(-0.5 * r * r) *
           (dF - r * F);
}

std::complex<double> chi_value(const Mode& mode, double x) {
    if (mode.n == 0) return {0.0, 0.0};
    // (i/E)(phi' + (m + b x) phi) = (i sqrt(b)/E) N exp(-r^2/2) F'(r)
    const double r = to_oscillator_coordinate(mode.params, x);
    const double amplitude = std::sqrt(mode.params.slope()) / mode.energy * mode.phase *
                             mode.norm_constant * std::exp(-0.5 * r * r) *
                             eval_F_derivative(mode.series, r);
    return {0.0, amplitude};
}

std::complex<double> chi_derivative(const Mode& mode, double x) {
    if (mode.n == 0) return {0.0, 0.0};
    const double r = to_oscillator_coordinate(mode.params, x);
    const double amplitude = mode.params.slope() / mode.energy * mode.phase * mode.norm_constant *
                             std::exp(-0.5 * r * r) *
                             (eval_F_second_derivative(mode.series, r) - r * eval_F_derivative(mode.series, r));
    return {0.0, amplitude};
}

SpinorField sample_mode(const Mode& mode, const Grid& grid) {
    SpinorField field{grid, {}, {}};
    field.upper.reserve(grid.size());
    field.lower.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        field.upper.emplace_back(phi_value(mode, grid[i]), 0.0);
        field.lower.push_back(chi_value(mode, grid[i]));
    }
    return field;
}

RealField real_majorana_field(const Mode& mode, double t, const Grid& grid) {
    const std::complex<double> phase_t = std::exp(std::complex<double>(0.0, -mode.energy * t));
    RealField field{grid, {}, {}};
    field.upper.reserve(grid.size());
    field.lower.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        field.upper.push_back((phase_t * phi_value(mode, grid[i])).real());
        field.lower.push_back((phase_t * chi_value(mode, grid[i])).real());
    }
    return field;
}

}  // namespace majconf
