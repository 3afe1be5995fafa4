#include "majconf/params.hpp"

#include <cmath>
#include <stdexcept>

namespace majconf {

PotentialParams::PotentialParams(double mass, double slope) : mass_(mass), slope_(slope) {
    if (!std::isfinite(mass)) throw std::invalid_argument("m must be finite");
    if (!std::isfinite(slope) || !(slope > 0.0)) throw std::invalid_argument("b must be positive");
    origin_shift_ = mass / slope;
}

}  // namespace majconf
