#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cwalk/circuits.hpp"
#include "cwalk/constructions.hpp"
#include "cwalk/errors.hpp"
#include "cwalk/search.hpp"

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

SubsetSumInstance inst(std::vector<long> a, long S, std::size_t k) {
  SubsetSumInstance s;
  for (long x : a) s.a.push_back(BigInt(x));
  s.S = BigInt(S);
  s.k = k;
  return s;
}

BigInt ipow(long base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("P_1 is the base triangle") {
  const PellArtifact p = build_p_ell(1);
  CHECK(p.h.rows() == std::vector<HRow>{HRow::make({-1, 0}, 0), HRow::make({1, 1}, 1), HRow::make({1, -1}, 1)});
  CHECK(p.A.size() == 3);
  CHECK(p.A[0][0] == -1);
  CHECK(p.A[0][1] == 0);
  CHECK(p.b == std::vector<BigInt>{0, 1, 1});
  CHECK(p.t == Point2{1, 0});
  CHECK(kind_of([] { build_p_ell(0); }) == ErrorKind::BadParameter);
}

TEST_CASE("P_2 vertices") {
  const PellArtifact p = build_p_ell(2);
  const std::set<Point2> got(p.h.vertex_form().vertices().begin(), p.h.vertex_form().vertices().end());
  CHECK(got == std::set<Point2>{{0, 1}, {0, -1}, {1, q(1, 2)}, {1, q(-1, 2)}, {q(9, 8), 0}});
  CHECK(p.t == Point2{q(9, 8), 0});
}

TEST_CASE("P_ell structure for ell up to 6") {
  for (std::size_t ell = 1; ell <= 6; ++ell) {
    CAPTURE(ell);
    const PellArtifact p = build_p_ell(ell);
    const VPolygon& v = p.h.vertex_form();
    CHECK(p.h.size() == 2 * ell + 1);
    CHECK(v.size() == 2 * ell + 1);
    CHECK(p.u == Point2{0, 1});
    CHECK(p.w == Point2{0, -1});
    const std::size_t iu = v.index_of(p.u);
    REQUIRE(iu < v.size());
    CHECK((v.next(iu) == p.w || v.prev(iu) == p.w));
    const BigInt cap = ipow(static_cast<long>(8 * ell + 1), ell);
    for (std::size_t i = 0; i < p.A.size(); ++i) {
      CHECK(abs(p.A[i][0]) <= cap);
      CHECK(abs(p.A[i][1]) <= cap);
      CHECK(abs(p.b[i]) <= cap);
      // The raw rows describe the same halfplanes as the stored ones.
      CHECK(HRow::make({Rational(p.A[i][0]), Rational(p.A[i][1])}, Rational(p.b[i])) == p.h.rows()[i]);
    }
    for (const auto& x : v.vertices()) {
      if (x == p.u || x == p.w) continue;
      CHECK(x.x.sign() >= 0);
      CHECK(x.y.abs() < 1);
    }
    // Symmetric about the x-axis and with a unique rightmost vertex.
    for (const auto& x : v.vertices()) CHECK(v.index_of({x.x, -x.y}) < v.size());
    std::size_t rightmost = 0;
    for (const auto& x : v.vertices()) rightmost += x.x == p.t.x;
    CHECK(rightmost == 1);
    CHECK(p.t.y == 0);
  }
}

TEST_CASE("slope chain example") {
  const SlopeChain ch = build_slope_chain(inst({2, 3}, 5, 2), {-1, 2});
  CHECK(ch.beta == q(1, 2));
  CHECK(ch.f == std::vector<BigInt>{0, 2, 5});
  CHECK(ch.v == std::vector<Point2>{{q(4, 5), 0}, {q(9, 10), q(1, 5)}, {1, q(1, 2)}});
  CHECK(kind_of([] { build_slope_chain(inst({2, 3}, 5, 2), {1, 2}); }) == ErrorKind::BadCost);
  CHECK(kind_of([] { build_slope_chain(inst({0, 3}, 5, 2), {-1, 2}); }) == ErrorKind::BadInstance);
}

TEST_CASE("slope chain properties") {
  const std::vector<std::vector<long>> as{{1}, {2, 3}, {1, 4, 9}, {3, 5, 6, 10}};
  const std::vector<Vec2> costs{{-1, 2}, {-1, 5}, {-2, 3}, {-1, 24}};
  for (const auto& a : as) {
    for (const Vec2& c : costs) {
      const SlopeChain ch = build_slope_chain(inst(a, 100, 1), c);
      REQUIRE(ch.v.size() == a.size() + 1);
      CHECK(ch.v.front().y == 0);
      CHECK(ch.v.back().x == 1);
      for (const auto& p : ch.v) {
        CHECK(p.x.sign() > 0);
        CHECK(p.x <= 1);
        CHECK(p.y.sign() >= 0);
        CHECK(p.y < 1);
        CHECK(dot(c, p).sign() <= 0);
      }
      for (std::size_t i = 1; i < ch.v.size(); ++i) {
        const Vec2 d = ch.v[i] - ch.v[i - 1];
        CHECK(d.y == Rational(a[i - 1]) * d.x);
      }
      // c_i = ((a_i + a_{i+1})/2, -1) singles out v_i.
      const std::size_t n = a.size();
      for (std::size_t i = 0; i <= n; ++i) {
        Rational cx;
        if (i == 0) cx = q(a[0], 2);
        else if (i == n) cx = Rational(2 * a[n - 1]);
        else cx = q(a[i - 1] + a[i], 2);
        const Vec2 ci{cx, -1};
        for (std::size_t j = 0; j <= n; ++j)
          if (j != i) CHECK(dot(ci, ch.v[j]) < dot(ci, ch.v[i]));
      }
    }
  }
}

TEST_CASE("corner transform postconditions") {
  for (long C : {1, 2}) {
    const SubsetSumInstance s = inst({2, 3}, 5, 2);
    const CornerTransform ct = build_corner_transform(s, BigInt(C));
    const std::size_t Ck = static_cast<std::size_t>(C) * 2;
    CHECK(ct.Ck == Ck);
    CHECK(ct.beta == q(1, static_cast<long>(6 * Ck)));
    const PellArtifact p = build_p_ell(Ck);
    std::vector<Point2> img;
    for (const auto& x : p.h.vertex_form().vertices()) img.push_back(ct.map(x));
    CHECK(ct.map(p.u).x == 0);
    CHECK(ct.map(p.t).y == 5);
    const Rational bound = q(1, static_cast<long>(2 * Ck));
    const VPolygon hull = hull2d(img);
    CHECK(hull.size() == img.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vec2 d = hull.next(i) - hull[i];
      REQUIRE_FALSE(d.x.is_zero());
      const Rational slope = d.y / d.x;
      CHECK(slope.sign() > 0);
      CHECK(slope < bound);
    }
    for (const auto& x : img) {
      CHECK(x.x.sign() >= 0);
      CHECK(x.x < ct.box);
      CHECK(x.y > 5 - ct.box / 2);
      CHECK(x.y < 5 + ct.box / 2);
    }
    CHECK(ct.box == pow(ct.s1 / 3, (Ck + 1) / 2 + 1));
  }
}

TEST_CASE("gap constant") {
  CHECK(compute_gap_C(2, 1, 1) == 64);
  // 8^3 k^2 dominates for small n.
  CHECK(compute_gap_C(3, 2, 2) == 2048);
  BigInt prev = 0;
  for (long n = 1; n <= 12; ++n) {
    const BigInt C = compute_gap_C(2, n, 1);
    CHECK(C >= prev);
    prev = C;
  }
  for (auto [n, k] : {std::pair{4L, 2L}, {6L, 3L}, {8L, 4L}}) {
    const BigInt C = compute_gap_C(2, n, k);
    // Direct evaluation of ⌈max{64k, 8√n}⌉.
    const BigInt want = std::max(BigInt(64 * k), ceil_root(BigInt(64 * n), 2));
    CHECK(C == want);
    // Sufficient integer certificate: 4k(⌈√(Ck)⌉ + ⌈√n⌉) <= Ck.
    const BigInt Ck = C * k;
    CHECK(4 * k * (ceil_root(Ck, 2) + ceil_root(BigInt(n), 2)) <= Ck);
    CHECK(gap_bound_holds(C, 2, n, k));
  }
  CHECK_FALSE(gap_bound_holds(1, 2, 4, 2));
}

TEST_CASE("feasible reduction instance") {
  const SubsetSumInstance s = inst({2, 3}, 5, 2);
  const ReductionInstance red = build_reduction(s, 2);
  CHECK(red.Ck() == 4);
  CHECK(red.polygon.size() == 14);
  CHECK(red.s == Point2{0, 0});
  CHECK(red.t.y == 5);
  CHECK(red.c.x.sign() < 0);
  CHECK(red.c.y.sign() > 0);
  CHECK(red.epsilon.sign() > 0);
  CHECK(red.epsilon < red.corner.box / 2);

  const PellArtifact p = build_p_ell(4);
  CHECK(red.epsilon == red.corner.map(p.w).y - 5);
  CHECK(red.t == red.corner.map(p.t));
  std::set<Point2> expected{{0, 0}, {1, 5 + red.epsilon}};
  for (const auto& x : red.chain.v) expected.insert(x);
  for (const auto& x : p.h.vertex_form().vertices()) expected.insert(red.corner.map(x));
  CHECK(std::set<Point2>(red.vertices().vertices().begin(), red.vertices().vertices().end()) == expected);

  for (const auto& g : enumerate_circuits(red.polygon)) {
    const Vec2& d = g.vec();
    CircuitType want = CircuitType::Unclassified;
    if (d == Vec2{1, 0} || d == Vec2{0, 1}) want = CircuitType::Axis;
    else if (d == Vec2{1, 2} || d == Vec2{1, 3}) want = CircuitType::Summand;
    else if (d.x.sign() > 0 && (d.y / d.x).abs() < q(1, 8)) want = CircuitType::Corner;
    CHECK(classify_circuit(red, g) == want);
    CHECK(want != CircuitType::Unclassified);
  }

  const Walk w = witness_walk(red, {1, 1});
  CHECK(w.length() == 4);
  CHECK(w.points[1] == Point2{1, 2});
  CHECK(w.points[2] == Point2{0, 2});
  CHECK(w.points[3] == Point2{1, 5});
  CHECK(w.end() == red.t);
  CHECK(is_valid_monotone_walk(red.polygon, red.c, w));
  CHECK(kind_of([&] { witness_walk(red, {2, 0}); }) == ErrorKind::BadParameter);

  const DistanceResult r = shortest_monotone_walk(red.polygon, red.s, red.c, {4, 1'000'000});
  REQUIRE(r.found());
  CHECK(r.walk->length() <= 4);
  // Walk points never revisit the bottom edge or the slope chain region.
  for (std::size_t i = 1; i < r.walk->points.size(); ++i) CHECK(r.walk->points[i].y.sign() > 0);
}

TEST_CASE("infeasible reduction instance") {
  const ReductionInstance red = build_reduction(inst({2, 4}, 5, 2), 2);
  const DistanceResult r = shortest_monotone_walk(red.polygon, red.s, red.c, {4, 10'000'000});
  CHECK(r.outcome == SearchOutcome::NotFoundWithinDepth);
}

TEST_CASE("corner distance from the images of u and w") {
  const ReductionInstance red = build_reduction(inst({2, 3}, 5, 2), 2);
  const PellArtifact p = build_p_ell(red.Ck());
  for (const Point2& x : {p.u, p.w}) {
    const DistanceResult r = shortest_monotone_walk(red.polygon, red.corner.map(x), red.c, {red.Ck(), 1'000'000});
    REQUIRE(r.found());
    CHECK(r.walk->length() == red.Ck());
  }
}

TEST_CASE("instance validation") {
  CHECK(kind_of([] { inst({}, 5, 1).validate(); }) == ErrorKind::BadInstance);
  CHECK(kind_of([] { inst({3, 2}, 5, 1).validate(); }) == ErrorKind::BadInstance);
  CHECK(kind_of([] { inst({2, 3}, 0, 1).validate(); }) == ErrorKind::BadInstance);
  CHECK(kind_of([] { inst({2, 3}, 5, 3).validate(); }) == ErrorKind::BadInstance);
  CHECK(kind_of([] { inst({2, 3}, 5, 0).validate(); }) == ErrorKind::BadInstance);
  CHECK_NOTHROW(inst({2, 3}, 5, 2).validate());
}

TEST_CASE("lifts") {
  const PellArtifact p = build_p_ell(2);
  const LiftedInstance same = lift_instance(p.h, p.u, {1, 0}, 2);
  CHECK(same.polytope.extra_dims == 0);
  CHECK(same.s.simplex.empty());
  const LiftedInstance l3 = lift_instance(p.h, p.u, {1, 0}, 3);
  CHECK(l3.s.simplex == std::vector<Rational>{1});
  CHECK(l3.c.simplex == std::vector<Rational>{1});
  CHECK(l3.polytope.facet_count() == 7);
  CHECK(kind_of([&] { lift_instance(p.h, {q(1, 2), 0}, {1, 0}, 3); }) == ErrorKind::NotAVertex);
  CHECK(kind_of([&] { lift_instance(p.h, p.u, {1, 0}, 1); }) == ErrorKind::BadDimension);
  for (int d = 3; d <= 5; ++d) {
    const WedgeInstance wi = wedge_lift(p.h, p.u, {1, 0}, d);
    CHECK(wi.polytope.dim() == static_cast<std::size_t>(d));
    CHECK(wi.polytope.size() == 5 + static_cast<std::size_t>(d) - 2);
    CHECK(all_rows_facets(wi.polytope));
    CHECK(contains(wi.polytope, wi.s));
  }
}

TEST_CASE("3DM reduction formulas") {
  const SubsetSumInstance s = reduce_3dm_to_essr({1, {{0, 0, 0}}});
  CHECK(s.a == std::vector<BigInt>{15});
  CHECK(s.S == 15);
  CHECK(s.k == 1);
  CHECK(brute_force_essr(s, 2).verdict == EssrVerdict::Feasible);

  const ThreeDMInstance t{2, {{0, 1, 1}, {1, 0, 0}, {1, 1, 0}}};
  const SubsetSumInstance e = reduce_3dm_to_essr(t);
  const BigInt B = 3;
  for (std::size_t idx = 0; idx < t.triples.size(); ++idx) {
    const auto [i, j, h] = t.triples[idx];
    const BigInt want = ipow(3, i) + ipow(3, j + 2) + ipow(3, h + 4) + ipow(3, 6);
    CHECK(std::find(e.a.begin(), e.a.end(), want) != e.a.end());
  }
  for (BigInt x : e.a) {
    int ones = 0;
    while (x > 0) {
      const BigInt d = x % B;
      CHECK(d <= 1);
      ones += d == 1;
      x /= B;
    }
    CHECK(ones == 4);
  }
  CHECK(e.S == 2 * ipow(3, 6) + (ipow(3, 6) - 1) / 2);
  CHECK(kind_of([] { reduce_3dm_to_essr({2, {{0, 0, 0}}}); }) == ErrorKind::TriviallyInfeasible);
  CHECK(kind_of([] { ThreeDMInstance{2, {{0, 0, 2}}}.validate(); }) == ErrorKind::BadInstance);
  CHECK(kind_of([] { ThreeDMInstance{2, {{0, 0, 1}, {0, 0, 1}}}.validate(); }) == ErrorKind::BadInstance);
}

TEST_CASE("3DM equivalence over all small triple sets") {
  std::vector<std::array<std::size_t, 3>> universe;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t h = 0; h < 2; ++h) universe.push_back({i, j, h});
  std::size_t feasible = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    ThreeDMInstance t{2, {}};
    for (std::size_t b = 0; b < 8; ++b)
      if (mask & (1u << b)) t.triples.push_back(universe[b]);
    if (t.triples.size() > 5 || t.triples.size() < 2) continue;
    // Matching oracle: two disjoint triples.
    bool matching = false;
    for (std::size_t x = 0; x < t.triples.size(); ++x)
      for (std::size_t y = x + 1; y < t.triples.size(); ++y)
        matching = matching || (t.triples[x][0] != t.triples[y][0] && t.triples[x][1] != t.triples[y][1] &&
                                t.triples[x][2] != t.triples[y][2]);
    CHECK(has_perfect_matching(t) == matching);
    const EssrResult r = brute_force_essr(reduce_3dm_to_essr(t), 3);
    CHECK(r.verdict != EssrVerdict::PromiseViolated);
    CHECK((r.verdict == EssrVerdict::Feasible) == matching);
    feasible += matching;
  }
  CHECK(feasible > 0);
}

TEST_CASE("brute-force subset sum") {
  const EssrResult f = brute_force_essr(inst({2, 3}, 5, 2), 3);
  CHECK(f.verdict == EssrVerdict::Feasible);
  CHECK(f.r == std::vector<std::size_t>{1, 1});
  CHECK(brute_force_essr(inst({2, 4}, 5, 2), 3).verdict == EssrVerdict::Infeasible);
  const EssrResult v = brute_force_essr(inst({1, 2}, 3, 2), 3);
  CHECK(v.verdict == EssrVerdict::PromiseViolated);
  CHECK(v.r == std::vector<std::size_t>{3, 0});
  CHECK(kind_of([] { brute_force_essr(inst({1, 2, 3, 4, 5, 6, 7, 8}, 3, 2), 100, 1000); }) ==
        ErrorKind::SearchSpaceTooLarge);
}
