#include "majconf/quadrature.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace majconf {

double integrate_uniform(std::span<const double> samples, double spacing) {
    const std::size_t n = samples.size();
    if (n < 3) throw std::invalid_argument("quadrature needs at least 3 points");

    if (n % 2 == 1) {
        double odd = 0.0;
        double even = 0.0;
        for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 == 1 ? odd : even) += samples[i];
        return spacing / 3.0 * (samples.front() + 4.0 * odd + 2.0 * even + samples.back());
    }
    double inner = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) inner += samples[i];
    return spacing * (0.5 * (samples.front() + samples.back()) + inner);
}

double quadrature_norm(const SpinorField& field) {
    const std::size_t n = field.grid.size();
    if (field.upper.size() != n || field.lower.size() != n)
        throw std::invalid_argument("spinor components do not match the grid");
    std::vector<double> density(n);
    for (std::size_t i = 0; i < n; ++i)
        density[i] = std::norm(field.upper[i]) + std::norm(field.lower[i]);
    return integrate_uniform(density, field.grid.spacing());
}

}  // namespace majconf
