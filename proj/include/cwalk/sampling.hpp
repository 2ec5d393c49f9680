#pragma once

#include <cstddef>
#include <random>

#include "cwalk/geometry.hpp"
#include "cwalk/polygon.hpp"

namespace cwalk {

using Rng = std::mt19937_64;

/// Rational with numerator in [−bound, bound] and denominator in [1, bound].
Rational random_rational(Rng& rng, long bound = 100);
Point2 random_point(Rng& rng, long bound = 100);

/// Hull of 3..max_points random points, resampled until non-degenerate.
VPolygon random_polygon(Rng& rng, std::size_t max_points = 12, long bound = 100);

/// Random invertible affine map with small rational entries.
AffineMap2 random_affine(Rng& rng, long bound = 10);

/// Nonzero integer vector with entries in [−bound, bound].
Vec2 random_cost(Rng& rng, long bound = 5);

}  // namespace cwalk
