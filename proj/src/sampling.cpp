#include "cwalk/sampling.hpp"

#include <vector>

#include "cwalk/errors.hpp"

namespace cwalk {

Rational random_rational(Rng& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long n = num(rng);
  const long d = den(rng);
  return Rational(BigInt(n), BigInt(d));
}

Point2 random_point(Rng& rng, long bound) {
  Rational x = random_rational(rng, bound);
  Rational y = random_rational(rng, bound);
  return {std::move(x), std::move(y)};
}

VPolygon random_polygon(Rng& rng, std::size_t max_points, long bound) {
  std::uniform_int_distribution<std::size_t> count(3, std::max<std::size_t>(3, max_points));
  while (true) {
    std::vector<Point2> pts;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, bound));
    try {
      return hull2d(pts);
    } catch (const Error&) {
    }
  }
}

AffineMap2 random_affine(Rng& rng, long bound) {
  while (true) {
    Mat2 h{random_rational(rng, bound), random_rational(rng, bound), random_rational(rng, bound),
           random_rational(rng, bound)};
    if (h.det().is_zero()) continue;
    Vec2 t{random_rational(rng, bound), random_rational(rng, bound)};
    return {std::move(h), std::move(t)};
  }
}

Vec2 random_cost(Rng& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  while (true) {
    Vec2 c{d(rng), d(rng)};
    if (!c.is_zero()) return c;
  }
}

}  // namespace cwalk
