#pragma once

#include "majconf/algebra.hpp"
#include "majconf/analytic.hpp"
#include "majconf/grid.hpp"
#include "majconf/numeric.hpp"
#include "majconf/params.hpp"
#include "majconf/quadrature.hpp"
#include "majconf/tridiagonal.hpp"
#include "majconf/validate.hpp"
