#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cwalk/errors.hpp"
#include "cwalk/polygon.hpp"
#include "cwalk/sampling.hpp"

using namespace cwalk;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

HRow row(long a1, long a2, long b) { return HRow::make({a1, a2}, b); }

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

HPolygon p1() { return HPolygon({row(-1, 0, 0), row(1, 1, 1), row(1, -1, 1)}); }

// Brute-force hull oracle: a point is a vertex iff it is not in the convex
// hull of the others, checked by testing all triangles.
bool in_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  const int o1 = orientation(a, b, p), o2 = orientation(b, c, p), o3 = orientation(c, a, p);
  return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a, b) <= p && p <= std::max(a, b);
}

std::set<Point2> extreme_points(const std::vector<Point2>& pts) {
  std::set<Point2> uniq(pts.begin(), pts.end());
  std::vector<Point2> u(uniq.begin(), uniq.end());
  std::set<Point2> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool inside = false;
    for (std::size_t a = 0; a < u.size() && !inside; ++a)
      for (std::size_t b = 0; b < u.size() && !inside; ++b)
        for (std::size_t c = 0; c < u.size() && !inside; ++c) {
          if (a == i || b == i || c == i) continue;
          if (orientation(u[a], u[b], u[c]) == 0) {
            inside = on_segment(u[a], u[b], u[i]) && a != b;
          } else {
            inside = in_triangle(u[a], u[b], u[c], u[i]);
          }
        }
    if (!inside) out.insert(u[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("rows are stored as primitive integer triples") {
  const HRow r = HRow::make({q(1, 2), q(-1, 3)}, q(5, 6));
  CHECK(r.a == Vec2{3, -2});
  CHECK(r.b == 5);
  CHECK(HRow::make({2, 4}, 6) == HRow::make({1, 2}, 3));
  CHECK(kind_of([] { HRow::make({0, 0}, 1); }) == ErrorKind::BadParameter);
}

TEST_CASE("P_1 vertex form") {
  const HPolygon h = p1();
  const std::vector<Point2> expected{{0, -1}, {1, 0}, {0, 1}};
  CHECK(h.vertex_form().vertices() == expected);
  CHECK(contains(h, Point2{q(1, 2), q(1, 2)}));
  CHECK_FALSE(contains(h, Point2{q(1, 2), q(2, 3)}));
}

TEST_CASE("strict constructor rejects redundant, duplicate and unbounded input") {
  CHECK(kind_of([] { HPolygon({row(-1, 0, 0), row(1, 1, 1), row(1, -1, 1), row(1, 0, 5)}); }) ==
        ErrorKind::InvalidPolygon);
  CHECK(kind_of([] { HPolygon({row(-1, 0, 0), row(1, 1, 1), row(2, 2, 2), row(1, -1, 1)}); }) ==
        ErrorKind::InvalidPolygon);
  CHECK(kind_of([] { HPolygon({row(-1, 0, 0), row(1, 1, 1)}); }) == ErrorKind::UnboundedOrEmpty);
  CHECK(kind_of([] { HPolygon({row(-1, 0, 0), row(0, 1, 1), row(0, -1, 1)}); }) == ErrorKind::UnboundedOrEmpty);
  // Empty: x <= 0 and x >= 1.
  CHECK(kind_of([] { HPolygon({row(1, 0, 0), row(-1, 0, -1), row(0, 1, 1), row(0, -1, 1)}); }) ==
        ErrorKind::UnboundedOrEmpty);
  // A single point is not full-dimensional.
  CHECK(kind_of([] { HPolygon({row(1, 0, 0), row(-1, 0, 0), row(0, 1, 0), row(0, -1, 0)}); }) ==
        ErrorKind::UnboundedOrEmpty);
}

TEST_CASE("remove_redundant keeps first occurrences in order") {
  const std::vector<HRow> rows{row(1, 0, 5), row(-1, 0, 0), row(1, 1, 1), row(2, 2, 2), row(1, -1, 1)};
  const HPolygon h = remove_redundant(rows);
  CHECK(h.rows() == std::vector<HRow>{row(-1, 0, 0), row(1, 1, 1), row(1, -1, 1)});
}

TEST_CASE("hull2d handles degenerate input") {
  CHECK(kind_of([] { hull2d(std::vector<Point2>{{0, 0}, {1, 1}, {2, 2}}); }) == ErrorKind::DegenerateHull);
  CHECK(kind_of([] { hull2d(std::vector<Point2>{{0, 0}, {0, 0}, {1, 1}}); }) == ErrorKind::DegenerateHull);
  const VPolygon sq = hull2d(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {q(1, 2), 0}, {q(1, 2), q(1, 2)}});
  CHECK(sq.size() == 4);
  CHECK(sq[0] == Point2{0, 0});
}

TEST_CASE("hull2d agrees with a brute-force extreme point oracle") {
  Rng rng(17);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int it = 0; it < 150; ++it) {
    std::vector<Point2> pts;
    const int n = 3 + it % 9;
    for (int i = 0; i < n; ++i) pts.push_back({small(rng), small(rng)});
    std::set<Point2> oracle = extreme_points(pts);
    if (oracle.size() < 3) {
      CHECK_THROWS_AS(hull2d(pts), Error);
      continue;
    }
    bool collinear = true;
    for (const auto& p : pts) collinear = collinear && orientation(*oracle.begin(), *oracle.rbegin(), p) == 0;
    if (collinear) {
      CHECK_THROWS_AS(hull2d(pts), Error);
      continue;
    }
    const VPolygon v = hull2d(pts);
    CHECK(std::set<Point2>(v.vertices().begin(), v.vertices().end()) == oracle);
  }
}

TEST_CASE("v_to_h and h_to_v are inverse") {
  Rng rng(23);
  for (int it = 0; it < 100; ++it) {
    const VPolygon v = random_polygon(rng);
    const HPolygon h = v_to_h(v);
    CHECK(h.size() == v.size());
    CHECK(h_to_v(h) == v);
    CHECK(equivalent(v_to_h(h_to_v(h)), h));
    for (const auto& p : v.vertices()) CHECK(contains(h, p));
  }
}

TEST_CASE("contains agrees between forms") {
  Rng rng(29);
  for (int it = 0; it < 50; ++it) {
    const VPolygon v = random_polygon(rng);
    const HPolygon h = v_to_h(v);
    for (int j = 0; j < 20; ++j) {
      const Point2 p = random_point(rng);
      CHECK(contains(h, p) == v.contains(p));
    }
  }
}

TEST_CASE("transform maps rows so that images of points stay inside") {
  Rng rng(31);
  for (int it = 0; it < 50; ++it) {
    const VPolygon v = random_polygon(rng);
    const HPolygon h = v_to_h(v);
    const AffineMap2 m = random_affine(rng);
    const HPolygon mh = transform(m, h);
    std::vector<Point2> img;
    for (const auto& p : v.vertices()) img.push_back(m(p));
    CHECK(equivalent(mh, v_to_h(hull2d(img))));
    for (int j = 0; j < 10; ++j) {
      const Point2 p = random_point(rng);
      CHECK(contains(h, p) == contains(mh, m(p)));
    }
  }
}

TEST_CASE("lifted products") {
  const HPolygon h = p1();
  CHECK(product_with_simplex(h, 2).facet_count() == 3);
  CHECK(product_with_simplex(h, 3).facet_count() == 5);
  CHECK(product_with_simplex(h, 4).facet_count() == 6);
  CHECK(kind_of([&] { product_with_simplex(h, 1); }) == ErrorKind::BadDimension);
  const LiftedPolytope lp = product_with_simplex(h, 4);
  CHECK(contains(lp, LiftedPoint{{0, 1}, {q(1, 2), q(1, 2)}}));
  CHECK_FALSE(contains(lp, LiftedPoint{{0, 1}, {q(1, 2), q(2, 3)}}));
  CHECK_FALSE(contains(lp, LiftedPoint{{0, 1}, {q(-1, 2), 0}}));
}
