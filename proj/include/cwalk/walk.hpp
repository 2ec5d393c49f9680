#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cwalk/geometry.hpp"
#include "cwalk/polygon.hpp"

namespace cwalk {

/// Sequence of points x_0..x_k plus the directed circuit used for each move.
template <class Point, class Step>
struct BasicWalk {
  std::vector<Point> points;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  const Point& start() const { return points.front(); }
  const Point& end() const { return points.back(); }

  friend bool operator==(const BasicWalk&, const BasicWalk&) = default;
};

using Walk = BasicWalk<Point2, Vec2>;

/// Vector in R^{2+k} split along the product P × Δ_k.
struct LiftedVec {
  Vec2 base;
  std::vector<Rational> simplex;

  friend bool operator==(const LiftedVec&, const LiftedVec&) = default;
  friend auto operator<=>(const LiftedVec&, const LiftedVec&) = default;
};

using LiftedWalk = BasicWalk<LiftedPoint, LiftedVec>;

inline Rational dot(const LiftedVec& c, const LiftedPoint& p) {
  Rational v = dot(c.base, p.base);
  for (std::size_t i = 0; i < c.simplex.size(); ++i) v += c.simplex[i] * p.simplex[i];
  return v;
}

inline Rational dot(const LiftedVec& c, const LiftedVec& g) {
  Rational v = dot(c.base, g.base);
  for (std::size_t i = 0; i < c.simplex.size(); ++i) v += c.simplex[i] * g.simplex[i];
  return v;
}

}  // namespace cwalk
