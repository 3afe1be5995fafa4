#pragma once

namespace majconf {

/// Linear scalar confinement m + S(x) with S(x) = b x. The mass enters the
/// bound states only through the origin shift x0 = m / b.
class PotentialParams {
public:
    /// Throws std::invalid_argument unless b > 0 and both values are finite.
    PotentialParams(double mass, double slope);

    double mass() const { return mass_; }
    double slope() const { return slope_; }
    double origin_shift() const { return origin_shift_; }

    /// m + b x
    double scalar_potential(double x) const { return mass_ + slope_ * x; }

private:
    double mass_;
    double slope_;
    double origin_shift_;
};

}  // namespace majconf
