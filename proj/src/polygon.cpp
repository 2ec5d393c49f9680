#include "cwalk/polygon.hpp"

#include <algorithm>
#include <string>

#include "cwalk/errors.hpp"

namespace cwalk {

HRow HRow::make(const Vec2& a, const Rational& b) {
  if (a.is_zero()) throw Error(ErrorKind::BadParameter, "inequality with zero normal");
  BigInt l = lcm(lcm(a.x.den(), a.y.den()), b.den());
  BigInt nx = a.x.num() * (l / a.x.den());
  BigInt ny = a.y.num() * (l / a.y.den());
  BigInt nb = b.num() * (l / b.den());
  BigInt g = gcd(gcd(nx, ny), nb);
  return {{Rational(BigInt(nx / g)), Rational(BigInt(ny / g))}, Rational(BigInt(nb / g))};
}

VPolygon::VPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorKind::InvalidPolygon, "fewer than 3 vertices");
  if (std::min_element(vertices_.begin(), vertices_.end()) != vertices_.begin())
    throw Error(ErrorKind::InvalidPolygon, "first vertex is not the lexicographic minimum");
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(vertices_[i], next(i), vertices_[(i + 2) % n]) <= 0)
      throw Error(ErrorKind::InvalidPolygon, "vertices not strictly convex counterclockwise");
    for (std::size_t j = 0; j < n; ++j)
      if (orientation(vertices_[i], next(i), vertices_[j]) < 0)
        throw Error(ErrorKind::InvalidPolygon, "vertex sequence is not a convex polygon");
  }
}

std::size_t VPolygon::index_of(const Point2& p) const {
  return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), p) - vertices_.begin());
}

bool VPolygon::contains(const Point2& p) const {
  const Point2& apex = vertices_.front();
  for (std::size_t i = 1; i + 1 < size(); ++i) {
    const Point2& b = vertices_[i];
    const Point2& c = vertices_[i + 1];
    if (orientation(apex, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, apex, p) >= 0)
      return true;
  }
  return false;
}

VPolygon hull2d(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorKind::DegenerateHull, "fewer than 3 distinct points");

  // Andrew's monotone chain; popping on non-left turns drops collinear points.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorKind::DegenerateHull, "all points are collinear");
  return VPolygon(std::move(hull));
}

namespace {

struct Analysis {
  std::vector<std::size_t> kept;  // input indices of facet-defining rows, input order
  std::vector<Point2> hull;
};

Analysis analyze(std::span<const HRow> rows) {
  if (rows.size() < 3) throw Error(ErrorKind::UnboundedOrEmpty, "fewer than 3 inequalities");

  // Recession cone {d : a_i·d <= 0} is nonzero iff one of its boundary rays
  // ±perp(a_i) lies in it.
  for (const auto& r : rows) {
    for (const Vec2& d : {Vec2{-r.a.y, r.a.x}, Vec2{r.a.y, -r.a.x}}) {
      const bool ray = std::all_of(rows.begin(), rows.end(),
                                   [&](const HRow& s) { return dot(s.a, d).sign() <= 0; });
      if (ray) throw Error(ErrorKind::UnboundedOrEmpty, "region is unbounded or empty");
    }
  }

  std::vector<Point2> candidates;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Rational det = cross(rows[i].a, rows[j].a);
      if (det.is_zero()) continue;
      // Cramer's rule for a_i·x = b_i, a_j·x = b_j.
      Point2 p{(rows[i].b * rows[j].a.y - rows[j].b * rows[i].a.y) / det,
               (rows[i].a.x * rows[j].b - rows[j].a.x * rows[i].b) / det};
      if (std::all_of(rows.begin(), rows.end(), [&](const HRow& r) { return r.satisfied_by(p); }))
        candidates.push_back(std::move(p));
    }
  }

  Analysis out;
  try {
    out.hull = hull2d(candidates).vertices();
  } catch (const Error&) {
    throw Error(ErrorKind::UnboundedOrEmpty, "region is empty or not full-dimensional");
  }
  const std::size_t n = out.hull.size();
  for (std::size_t e = 0; e < n; ++e) {
    const Point2& p = out.hull[e];
    const Point2& q = out.hull[(e + 1) % n];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].tight_at(p) && rows[i].tight_at(q)) {
        out.kept.push_back(i);
        break;
      }
    }
  }
  std::sort(out.kept.begin(), out.kept.end());
  return out;
}

std::vector<HRow> canonical_rows(std::span<const HRow> rows) {
  std::vector<HRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(HRow::make(r.a, r.b));
  return out;
}

}  // namespace

HPolygon::HPolygon(std::vector<HRow> rows)
    : rows_(canonical_rows(rows)),
      vertices_([this] {
        for (std::size_t i = 0; i < rows_.size(); ++i)
          for (std::size_t j = i + 1; j < rows_.size(); ++j)
            if (rows_[i] == rows_[j])
              throw Error(ErrorKind::InvalidPolygon,
                          "rows " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        Analysis a = analyze(rows_);
        if (a.kept.size() != rows_.size()) {
          std::size_t redundant = 0;
          while (redundant < a.kept.size() && a.kept[redundant] == redundant) ++redundant;
          throw Error(ErrorKind::InvalidPolygon, "row " + std::to_string(redundant) + " is redundant");
        }
        return VPolygon(std::move(a.hull));
      }()) {}

HPolygon v_to_h(const VPolygon& v) {
  std::vector<HRow> rows;
  rows.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 e = v.next(i) - v[i];
    const Vec2 normal{e.y, -e.x};  // outward for counterclockwise order
    rows.push_back(HRow::make(normal, dot(normal, v[i])));
  }
  return HPolygon(std::move(rows));
}

VPolygon h_to_v(const HPolygon& h) { return h.vertex_form(); }

HPolygon remove_redundant(std::span<const HRow> rows) {
  const std::vector<HRow> canon = canonical_rows(rows);
  const Analysis a = analyze(canon);
  std::vector<HRow> kept;
  kept.reserve(a.kept.size());
  for (std::size_t i : a.kept) kept.push_back(canon[i]);
  return HPolygon(std::move(kept));
}

bool contains(const HPolygon& h, const Point2& p) {
  return std::all_of(h.rows().begin(), h.rows().end(), [&](const HRow& r) { return r.satisfied_by(p); });
}

bool equivalent(const HPolygon& a, const HPolygon& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.rows().begin(), a.rows().end(), [&](const HRow& r) {
    return std::find(b.rows().begin(), b.rows().end(), r) != b.rows().end();
  });
}

HPolygon transform(const AffineMap2& m, const HPolygon& h) {
  const Mat2 inv = m.h().inverse();
  std::vector<HRow> rows;
  rows.reserve(h.size());
  for (const auto& r : h.rows()) {
    const Vec2 a{r.a.x * inv.a + r.a.y * inv.c, r.a.x * inv.b + r.a.y * inv.d};
    rows.push_back(HRow::make(a, r.b + dot(a, m.t())));
  }
  return HPolygon(std::move(rows));
}

LiftedPolytope product_with_simplex(const HPolygon& h, int d) {
  if (d < 2) throw Error(ErrorKind::BadDimension, "lift dimension must be at least 2");
  return {h, static_cast<std::size_t>(d - 2)};
}

bool contains(const LiftedPolytope& lp, const LiftedPoint& p) {
  if (p.simplex.size() != lp.extra_dims) return false;
  if (!contains(lp.base, p.base)) return false;
  Rational sum = 0;
  for (const auto& y : p.simplex) {
    if (y.sign() < 0) return false;
    sum += y;
  }
  return sum <= Rational(1);
}

}  // namespace cwalk
