#pragma once

#include <span>

#include "majconf/grid.hpp"

namespace majconf {

/// Composite Simpson for an odd number of samples, trapezoid otherwise.
/// Throws std::invalid_argument for fewer than 3 samples.
double integrate_uniform(std::span<const double> samples, double spacing);

/// int (|phi|^2 + |chi|^2) dx over the field's grid.
double quadrature_norm(const SpinorField& field);

}  // namespace majconf
