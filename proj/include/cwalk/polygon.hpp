#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cwalk/geometry.hpp"

namespace cwalk {

/// One inequality a·x <= b, stored as a primitive integer triple (a1, a2, b)
/// obtained by positive scaling, so equal halfplanes have equal rows.
struct HRow {
  Vec2 a;
  Rational b;

  /// Canonicalizes (a, b); throws BadParameter when a = 0.
  static HRow make(const Vec2& a, const Rational& b);

  bool satisfied_by(const Point2& p) const { return dot(a, p) <= b; }
  bool tight_at(const Point2& p) const { return dot(a, p) == b; }

  friend bool operator==(const HRow&, const HRow&) = default;
};

/// Vertices in counterclockwise order, starting at the lexicographically
/// smallest vertex, strictly convex.
class VPolygon {
 public:
  /// Validates the invariants; throws InvalidPolygon otherwise.
  explicit VPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& next(std::size_t i) const { return vertices_[(i + 1) % size()]; }
  const Point2& prev(std::size_t i) const { return vertices_[(i + size() - 1) % size()]; }

  /// Index of p among the vertices, or size() if p is not a vertex.
  std::size_t index_of(const Point2& p) const;

  /// Point-in-convex-polygon by fan triangulation, boundary inclusive.
  bool contains(const Point2& p) const;

  friend bool operator==(const VPolygon&, const VPolygon&) = default;

 private:
  std::vector<Point2> vertices_;
};

/// Bounded, full-dimensional polygon {x : a_i·x <= b_i} with no redundant
/// and no duplicate rows. Row order is preserved as given.
class HPolygon {
 public:
  /// Strict constructor: throws UnboundedOrEmpty if the rows do not describe
  /// a bounded full-dimensional region, InvalidPolygon if a row is redundant
  /// or duplicated.
  explicit HPolygon(std::vector<HRow> rows);

  const std::vector<HRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  /// Cached vertex form, computed and checked at construction.
  const VPolygon& vertex_form() const { return vertices_; }

  friend bool operator==(const HPolygon& a, const HPolygon& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<HRow> rows_;
  VPolygon vertices_;
};

/// Exact convex hull (collinear points dropped). Throws DegenerateHull for
/// fewer than three distinct points or collinear input.
VPolygon hull2d(std::span<const Point2> points);

/// One canonical row per edge, in the vertex order of v.
HPolygon v_to_h(const VPolygon& v);
VPolygon h_to_v(const HPolygon& h);

/// Minimal row set describing the same region; keeps the first occurrence
/// of each surviving halfplane in input order. Throws UnboundedOrEmpty.
HPolygon remove_redundant(std::span<const HRow> rows);

bool contains(const HPolygon& h, const Point2& p);

/// Same region, ignoring row order (rows are canonical, so scaling is
/// already factored out).
bool equivalent(const HPolygon& a, const HPolygon& b);

/// Image of h under m: rows a·H⁻¹ x <= b + a·H⁻¹·t.
HPolygon transform(const AffineMap2& m, const HPolygon& h);

/// P × conv(0, e_1, ..., e_k) with k = extra_dims, kept in product form.
struct LiftedPolytope {
  HPolygon base;
  std::size_t extra_dims = 0;

  std::size_t dimension() const { return 2 + extra_dims; }
  /// m for k = 0; m + k + 1 (the y_i >= 0 rows and the sum row) otherwise.
  std::size_t facet_count() const {
    return base.size() + (extra_dims > 0 ? extra_dims + 1 : 0);
  }
};

struct LiftedPoint {
  Point2 base;
  std::vector<Rational> simplex;

  friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;
  friend auto operator<=>(const LiftedPoint&, const LiftedPoint&) = default;
};

LiftedPolytope product_with_simplex(const HPolygon& h, int d);
bool contains(const LiftedPolytope& lp, const LiftedPoint& p);

}  // namespace cwalk

template <>
struct std::hash<cwalk::LiftedPoint> {
  std::size_t operator()(const cwalk::LiftedPoint& p) const noexcept {
    std::size_t h = std::hash<cwalk::Point2>{}(p.base);
    for (const auto& r : p.simplex) h = cwalk::hash_combine(h, r.hash());
    return h;
  }
};
