#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cwalk/circuits.hpp"
#include "cwalk/constructions.hpp"
#include "cwalk/errors.hpp"
#include "cwalk/polytope_nd.hpp"
#include "cwalk/sampling.hpp"
#include "oracle.hpp"

using namespace cwalk;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

HPolygon unit_square() {
  return HPolygon({HRow::make({1, 0}, 1), HRow::make({0, 1}, 1), HRow::make({-1, 0}, 0), HRow::make({0, -1}, 0)});
}

}  // namespace

TEST_CASE("circuits of random polygons are the edge directions") {
  Rng rng(101);
  for (int it = 0; it < 100; ++it) {
    const VPolygon v = random_polygon(rng);
    const HPolygon h = v_to_h(v);
    const CircuitSet cs = enumerate_circuits(h);
    CHECK(std::set<Direction2>(cs.begin(), cs.end()) == oracle::edge_directions(v));
    CHECK(std::is_sorted(cs.begin(), cs.end()));
    for (const auto& d : cs) {
      CHECK(is_circuit(h, d.vec()));
      CHECK(is_circuit(h, q(-3, 7) * d.vec()));
    }
  }
}

TEST_CASE("parallel edges give one class") {
  const CircuitSet cs = enumerate_circuits(unit_square());
  CHECK(cs == CircuitSet{Direction2::of({0, 1}), Direction2::of({1, 0})});
  CHECK_FALSE(is_circuit(unit_square(), {1, 1}));
}

TEST_CASE("maximal step agrees with the ray oracle") {
  Rng rng(103);
  for (int it = 0; it < 60; ++it) {
    const VPolygon v = random_polygon(rng, 8, 20);
    const HPolygon h = v_to_h(v);
    std::vector<Point2> starts(v.vertices());
    // Interior points: centroid-like averages of vertices.
    starts.push_back({(v[0].x + v[1].x + v[2].x) / q(3), (v[0].y + v[1].y + v[2].y) / q(3)});
    for (const auto& d : enumerate_circuits(h)) {
      for (const Vec2& g : {d.vec(), -d.vec()}) {
        for (const auto& p : starts) {
          const Rational lam = oracle::ray_exit(v, p, g);
          const auto moved = circuit_move(h, p, g);
          if (lam.is_zero()) {
            CHECK_FALSE(moved.has_value());
          } else {
            REQUIRE(moved.has_value());
            CHECK(*moved == p + lam * g);
            CHECK(max_step(h, p, g) == lam);
          }
        }
      }
    }
  }
}

TEST_CASE("step certificate lists every tight row") {
  const HPolygon sq = unit_square();
  const StepCertificate cert = max_step_certificate(sq, {0, 0}, {1, 1});
  CHECK(cert.lambda == 1);
  CHECK(cert.tight_rows == std::vector<std::size_t>{0, 1});
  CHECK(kind_of([&] { circuit_move(sq, {0, 0}, {1, 1}); }) == ErrorKind::NotACircuit);
  CHECK_FALSE(circuit_move(sq, {1, 0}, {1, 0}).has_value());
  CHECK(*circuit_move(sq, {q(1, 2), q(1, 3)}, {0, -5}) == Point2{q(1, 2), 0});
}

TEST_CASE("monotone directions") {
  const CircuitSet cs = enumerate_circuits(unit_square());
  CHECK(monotone_directions(cs, {1, 0}) == std::vector<Vec2>{{1, 0}});
  CHECK(monotone_directions(cs, {-1, 2}) == std::vector<Vec2>{{-1, 0}, {0, 1}});
  Rng rng(107);
  for (int it = 0; it < 50; ++it) {
    const VPolygon v = random_polygon(rng);
    const Vec2 c = random_cost(rng);
    CHECK(monotone_directions(enumerate_circuits(v_to_h(v)), c) == oracle::improving(v, c));
  }
}

TEST_CASE("lifted circuits") {
  const HPolygon sq = unit_square();
  const LiftedPolytope lp = product_with_simplex(sq, 4);
  const auto cs = enumerate_lifted_circuits(lp);
  // 2 base classes, 2 simplex axes, 1 simplex difference.
  CHECK(cs.size() == 5);
  const LiftedVec e0 = as_vector(SimplexAxis{0}, 2);
  CHECK(e0.base == Vec2{0, 0});
  CHECK(e0.simplex == std::vector<Rational>{1, 0});
  const auto moved = circuit_move(lp, LiftedPoint{{0, 0}, {0, 0}}, e0);
  REQUIRE(moved.has_value());
  CHECK(moved->simplex == std::vector<Rational>{1, 0});
  const auto diff = circuit_move(lp, *moved, as_vector(SimplexDiff{0, 1}, 2));
  CHECK_FALSE(diff.has_value());
  const LiftedVec back{{0, 0}, {-1, 1}};
  CHECK(circuit_move(lp, *moved, back)->simplex == std::vector<Rational>{0, 1});
}

TEST_CASE("monotone edge walk reaches the optimum along edges") {
  Rng rng(109);
  int tested = 0;
  for (int it = 0; it < 200 && tested < 80; ++it) {
    const VPolygon v = random_polygon(rng);
    const HPolygon h = v_to_h(v);
    const Vec2 c = random_cost(rng);
    const Rational opt = oracle::max_value(v, c);
    std::size_t maximizers = 0;
    for (const auto& p : v.vertices()) maximizers += cwalk::dot(c, p) == opt;
    const Point2 s = v[static_cast<std::size_t>(it) % v.size()];
    if (maximizers != 1) {
      CHECK(kind_of([&] { monotone_edge_walk(h, s, c); }) == ErrorKind::AmbiguousOptimum);
      continue;
    }
    ++tested;
    const Walk w = monotone_edge_walk(h, s, c);
    CHECK(w.start() == s);
    CHECK(cwalk::dot(c, w.end()) == opt);
    for (std::size_t i = 0; i < w.length(); ++i) {
      CHECK(v.index_of(w.points[i + 1]) < v.size());
      CHECK(cwalk::dot(c, w.points[i + 1]) > cwalk::dot(c, w.points[i]));
    }
    CHECK(w.length() < v.size());
  }
  CHECK(tested > 20);
  CHECK(kind_of([] { monotone_edge_walk(unit_square(), {q(1, 2), 0}, {1, 1}); }) == ErrorKind::NotAVertex);
  CHECK(kind_of([] { monotone_edge_walk(unit_square(), {0, 0}, {0, 0}); }) == ErrorKind::BadCost);
}

TEST_CASE("d-dimensional circuits of a cube and a simplex") {
  auto unit = [](std::size_t d, std::size_t i, long s) {
    VecN e{std::vector<Rational>(d, Rational(0))};
    e[i] = Rational(s);
    return e;
  };
  std::vector<HRowN> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    rows.push_back({unit(3, i, 1), 1});
    rows.push_back({unit(3, i, -1), 0});
  }
  const HPolytopeN cube(3, rows);
  CHECK(vertices(cube).size() == 8);
  CHECK(all_rows_facets(cube));
  CHECK(enumerate_circuits(cube) == std::vector<VecN>{unit(3, 2, 1), unit(3, 1, 1), unit(3, 0, 1)});

  std::vector<HRowN> srows{{VecN{{1, 1, 1}}, 1}};
  for (std::size_t i = 0; i < 3; ++i) srows.push_back({unit(3, i, -1), 0});
  const HPolytopeN simplex(3, srows);
  CHECK(vertices(simplex).size() == 4);
  // Edge directions of the 3-simplex: e_i and e_i − e_j.
  CHECK(enumerate_circuits(simplex).size() == 6);
  CHECK(kind_of([] { HPolytopeN(2, {{VecN{{1, 0, 0}}, 1}}); }) == ErrorKind::BadDimension);
  const auto moved = circuit_move(simplex, VecN{{0, 0, 0}}, VecN{{0, 2, 0}});
  REQUIRE(moved.has_value());
  CHECK(*moved == VecN{{0, 1, 0}});
}
