#include "cwalk/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cwalk/circuits.hpp"
#include "cwalk/errors.hpp"
#include "cwalk/search.hpp"

namespace cwalk {

namespace {

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

[[noreturn]] void failed(const std::string& what) { throw Error(ErrorKind::ConstructionFailed, what); }

Rational edge_slope(const Point2& p, const Point2& q) {
  const Vec2 d = q - p;
  if (d.x.is_zero()) failed("vertical edge where a finite slope is required");
  return d.y / d.x;
}

std::vector<Point2> map_all(const AffineMap2& m, const std::vector<Point2>& pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(m(p));
  return out;
}

}  // namespace

PellArtifact build_p_ell(std::size_t ell) {
  if (ell < 1) throw Error(ErrorKind::BadParameter, "ell must be at least 1");
  std::vector<std::array<BigInt, 2>> A{{BigInt(-1), BigInt(0)}, {BigInt(1), BigInt(1)}, {BigInt(1), BigInt(-1)}};
  std::vector<BigInt> b{0, 1, 1};
  Rational tx = 1;
  for (std::size_t l = 1; l < ell; ++l) {
    const BigInt scale = 8 * static_cast<unsigned long>(l);
    for (std::size_t i = 1; i < A.size(); ++i) {
      A[i][0] *= scale;
      A[i][1] *= 2;
      b[i] += A[i][0];
    }
    A.push_back({BigInt(1), BigInt(2)});
    b.push_back(2);
    A.push_back({BigInt(1), BigInt(-2)});
    b.push_back(2);
    tx = Rational(1) + tx / Rational(scale);
  }
  std::vector<HRow> rows;
  rows.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) rows.push_back(HRow::make({A[i][0], A[i][1]}, b[i]));
  HPolygon h(std::move(rows));
  return {ell, std::move(A), std::move(b), std::move(h), {0, 1}, {0, -1}, {tx, 0}};
}

void SubsetSumInstance::validate() const {
  if (a.empty()) throw Error(ErrorKind::BadInstance, "no numbers");
  if (a.front() < 1) throw Error(ErrorKind::BadInstance, "numbers must be at least 1");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1]) throw Error(ErrorKind::BadInstance, "numbers must be strictly increasing");
  if (S < 1) throw Error(ErrorKind::BadInstance, "target must be positive");
  if (k < 1 || k > a.size()) throw Error(ErrorKind::BadInstance, "k must satisfy 1 <= k <= n");
}

CornerTransform build_corner_transform(const SubsetSumInstance& inst, const BigInt& C) {
  inst.validate();
  if (C < 1) throw Error(ErrorKind::BadParameter, "C must be at least 1");
  const BigInt ck_big = C * static_cast<unsigned long>(inst.k);
  if (!ck_big.fits_ulong_p() || ck_big > 4096) throw Error(ErrorKind::BadParameter, "Ck is too large");
  const std::size_t Ck = ck_big.get_ui();
  const PellArtifact pell = build_p_ell(Ck);
  const auto& verts = pell.h.vertex_form().vertices();

  CornerTransform ct;
  ct.Ck = Ck;
  bool first = true;
  for (const auto& p : verts) {
    if (p == pell.u || p == pell.w) continue;
    Rational r = (Rational(1) - p.y.abs()) / p.x;
    if (first || r < ct.alpha) ct.alpha = std::move(r);
    first = false;
  }
  ct.alpha = ct.alpha / 4;
  ct.beta = Rational(1) / Rational(static_cast<long>(6 * Ck));
  ct.t1 = Mat2{-1, -1, 1, -1} * Mat2::diag(ct.alpha, 1);
  const Mat2 t2 = Mat2::diag(1, ct.beta) * ct.t1;

  const VPolygon squashed = hull2d(map_all(AffineMap2::linear(t2), verts));
  for (std::size_t i = 0; i < squashed.size(); ++i) {
    Rational s = edge_slope(squashed[i], squashed.next(i));
    if (i == 0 || s < ct.s1) ct.s1 = std::move(s);
  }
  ct.box = pow(ct.s1 / Rational(inst.a.back()), (Ck + 1) / 2 + 1);
  ct.gamma = ct.box / 4;

  const Mat2 H = ct.gamma * t2;
  const Vec2 hu = H * Vec2{pell.u.x, pell.u.y};
  const Vec2 ht = H * Vec2{pell.t.x, pell.t.y};
  ct.map = AffineMap2(H, Vec2{-hu.x, Rational(inst.S) - ht.y});

  const std::vector<Point2> image = map_all(ct.map, verts);
  const VPolygon img = hull2d(image);
  const Rational slope_cap = Rational(1) / Rational(static_cast<long>(2 * Ck));
  for (std::size_t i = 0; i < img.size(); ++i) {
    const Rational s = edge_slope(img[i], img.next(i));
    if (s.sign() <= 0 || s >= slope_cap) failed("corner slope outside (0, 1/(2Ck))");
  }
  if (!ct.map(pell.u).x.is_zero()) failed("image of u is not on x = 0");
  if (ct.map(pell.t).y != Rational(inst.S)) failed("image of t is not at height S");
  const Rational half = ct.box / 2;
  for (const auto& p : image) {
    if (p.x.sign() < 0 || p.x >= ct.box) failed("corner image leaves the x range");
    if ((p.y - Rational(inst.S)).abs() >= half) failed("corner image leaves the y range");
  }
  return ct;
}

SlopeChain build_slope_chain(const SubsetSumInstance& inst, const Vec2& c) {
  if (!(c.x.sign() < 0 && c.y.sign() > 0)) throw Error(ErrorKind::BadCost, "cost must satisfy c.x < 0 < c.y");
  for (const auto& ai : inst.a)
    if (ai < 1) throw Error(ErrorKind::BadInstance, "slope chain needs every a_i >= 1");
  const std::size_t n = inst.a.size();
  SlopeChain ch;
  ch.beta = std::min(-c.x / c.y, Rational(1));
  ch.f.assign(1, BigInt(0));
  for (const auto& ai : inst.a) ch.f.push_back(ch.f.back() + ai);
  const Rational fn = ch.f.back();
  for (std::size_t i = 0; i <= n; ++i) {
    ch.v.push_back({Rational(1) - Rational(static_cast<long>(n - i)) * ch.beta / fn, Rational(ch.f[i]) * ch.beta / fn});
  }
  for (const auto& p : ch.v) {
    if (p.x.sign() <= 0 || p.x > Rational(1) || p.y.sign() < 0 || p.y >= Rational(1))
      failed("slope chain leaves (0,1] x [0,1)");
  }
  return ch;
}

BigInt compute_gap_C(unsigned long t, const BigInt& n, const BigInt& k) {
  if (t < 2) throw Error(ErrorKind::BadParameter, "eps_inv must be at least 2");
  if (k < 1 || k > n) throw Error(ErrorKind::BadParameter, "need 1 <= k <= n");
  const BigInt first = ipow(8, t) * ipow(k, t - 1);
  const BigInt second = ceil_root(ipow(8, t) * ipow(n, t - 1), t);
  return std::max(first, second);
}

bool gap_bound_holds(const BigInt& C, unsigned long t, const BigInt& n, const BigInt& k) {
  if (t < 2) throw Error(ErrorKind::BadParameter, "eps_inv must be at least 2");
  if (t == 2) {
    // sqrt(A) + sqrt(B) <= C  with A = 16Ck, B = 16n.
    const BigInt A = 16 * C * k;
    const BigInt B = 16 * n;
    const BigInt rest = C * C - A - B;
    return rest >= 0 && 4 * A * B <= rest * rest;
  }
  const BigInt lhs = 4 * k * (ceil_root(ipow(C * k, t - 1), t) + ceil_root(ipow(n, t - 1), t));
  return lhs <= C * k;
}

ReductionInstance build_reduction(const SubsetSumInstance& inst, const BigInt& C) {
  inst.validate();
  CornerTransform corner = build_corner_transform(inst, C);
  const std::size_t Ck = corner.Ck;
  const PellArtifact pell = build_p_ell(Ck);

  const Vec2 c = pullback_cost(corner.map, Vec2{1, 0});
  SlopeChain chain = build_slope_chain(inst, c);
  const Rational S(inst.S);
  const Point2 t = corner.map(pell.t);
  const Rational epsilon = corner.map(pell.w).y - S;
  if (epsilon.sign() <= 0 || epsilon >= corner.box / 2) failed("epsilon outside (0, box/2)");

  std::vector<Point2> corner_vertices = map_all(corner.map, pell.h.vertex_form().vertices());
  std::vector<Point2> points{{0, 0}, {1, S + epsilon}};
  points.insert(points.end(), chain.v.begin(), chain.v.end());
  points.insert(points.end(), corner_vertices.begin(), corner_vertices.end());

  const VPolygon hull = hull2d(points);
  const std::set<Point2> wanted(points.begin(), points.end());
  const std::set<Point2> got(hull.vertices().begin(), hull.vertices().end());
  if (wanted.size() != points.size() || wanted != got) failed("vertex census does not match the point set");
  if (hull.size() != 4 + 2 * Ck + inst.n()) failed("unexpected edge count");

  HPolygon polygon = v_to_h(hull);
  const Optimum opt = optimal_value(polygon, c);
  if (opt.maximizers.size() != 1 || opt.maximizers.front() != t) failed("t is not the unique optimum");

  std::vector<std::string> warnings;
  if (Ck > 6) warnings.push_back("Ck = " + std::to_string(Ck) + " > 6: exhaustive verification is out of reach");

  ReductionInstance red{std::move(polygon), {0, 0}, c, t, epsilon, C, inst.k, inst.n(), inst,
                        std::move(corner), std::move(chain), std::move(corner_vertices), std::move(warnings)};
  for (const auto& g : enumerate_circuits(red.polygon))
    if (classify_circuit(red, g) == CircuitType::Unclassified) failed("circuit of unknown type");
  return red;
}

CircuitType classify_circuit(const ReductionInstance& red, const Direction2& g) {
  if (g.vec() == Vec2{1, 0} || g.vec() == Vec2{0, 1}) return CircuitType::Axis;
  if (g.dx().is_zero()) return CircuitType::Unclassified;
  if (g.dx() == Rational(1)) {
    for (const auto& ai : red.source.a)
      if (g.dy() == Rational(ai)) return CircuitType::Summand;
  }
  const Rational s = g.dy() / g.dx();
  if (s.sign() > 0 && s < Rational(1) / Rational(static_cast<long>(2 * red.Ck()))) return CircuitType::Corner;
  return CircuitType::Unclassified;
}

Walk witness_walk(const ReductionInstance& red, const std::vector<std::size_t>& r) {
  const auto& a = red.source.a;
  if (r.size() != a.size()) throw Error(ErrorKind::BadParameter, "solution has wrong length");
  BigInt total = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    total += a[i] * static_cast<unsigned long>(r[i]);
    count += r[i];
  }
  if (total != red.source.S || count == 0) throw Error(ErrorKind::BadParameter, "not a solution");

  Walk w;
  w.points.push_back(red.s);
  Rational y = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i]; ++j) {
      y += Rational(a[i]);
      w.steps.push_back({1, Rational(a[i])});
      w.points.push_back({1, y});
      w.steps.push_back({-1, 0});
      w.points.push_back(++used == count ? red.t : Point2{0, y});
    }
  }
  return w;
}

LiftedInstance lift_instance(const HPolygon& h, const Point2& s, const Vec2& c, int d) {
  LiftedPolytope lp = product_with_simplex(h, d);
  if (h.vertex_form().index_of(s) == h.vertex_form().size())
    throw Error(ErrorKind::NotAVertex, "start point is not a vertex");
  if (c.is_zero()) throw Error(ErrorKind::BadCost, "cost vector is zero");
  const std::size_t k = lp.extra_dims;
  LiftedPoint ls{s, std::vector<Rational>(k)};
  LiftedVec lc{c, std::vector<Rational>(k)};
  if (k > 0) {
    ls.simplex.back() = 1;
    lc.simplex.back() = 1;
  }
  return {std::move(lp), std::move(ls), std::move(lc)};
}

WedgeInstance wedge_lift(const HPolygon& h, const Point2& s, const Vec2& c, int d, std::size_t facet) {
  if (d < 2) throw Error(ErrorKind::BadDimension, "lift dimension must be at least 2");
  if (facet >= h.size()) throw Error(ErrorKind::BadParameter, "facet index out of range");
  if (h.vertex_form().index_of(s) == h.vertex_form().size())
    throw Error(ErrorKind::NotAVertex, "start point is not a vertex");
  if (c.is_zero()) throw Error(ErrorKind::BadCost, "cost vector is zero");

  std::vector<HRowN> rows;
  for (const auto& r : h.rows()) rows.push_back({VecN{{r.a.x, r.a.y}}, r.b});
  std::size_t top = facet;
  VecN x{{s.x, s.y}};
  VecN cost{{c.x, c.y}};
  for (int dim = 2; dim < d; ++dim) {
    const HRowN F = rows[top];
    std::vector<HRowN> next;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == top) continue;
      HRowN r = rows[i];
      r.a.v.push_back(0);
      next.push_back(std::move(r));
    }
    HRowN lid = F;
    lid.a.v.push_back(1);
    next.push_back(std::move(lid));
    top = next.size() - 1;
    VecN floor_a{std::vector<Rational>(static_cast<std::size_t>(dim) + 1)};
    floor_a.v.back() = -1;
    next.push_back({std::move(floor_a), 0});
    rows = std::move(next);

    const HPolytopeN p(static_cast<std::size_t>(dim) + 1, rows);
    Rational mu = 0;
    for (const auto& g : enumerate_circuits(p)) {
      const Rational& gz = g.v.back();
      if (gz.is_zero()) continue;
      Rational gain = 0;
      for (std::size_t i = 0; i + 1 < g.size(); ++i) gain += cost[i] * g[i];
      mu = std::max(mu, gain / gz);  // same ratio for either orientation
    }
    x.v.push_back(0);
    cost.v.push_back(-(Rational(floor(mu)) + 1));
  }
  return {HPolytopeN(static_cast<std::size_t>(d), std::move(rows)), std::move(x), std::move(cost)};
}

void ThreeDMInstance::validate() const {
  if (n_elems < 1) throw Error(ErrorKind::BadInstance, "N must be at least 1");
  std::set<std::array<std::size_t, 3>> seen;
  for (const auto& e : triples) {
    for (std::size_t x : e)
      if (x >= n_elems) throw Error(ErrorKind::BadInstance, "triple index out of range");
    if (!seen.insert(e).second) throw Error(ErrorKind::BadInstance, "duplicate triple");
  }
}

SubsetSumInstance reduce_3dm_to_essr(const ThreeDMInstance& inst) {
  inst.validate();
  const std::size_t N = inst.n_elems;
  if (inst.triples.size() < N) throw Error(ErrorKind::TriviallyInfeasible, "fewer triples than elements");
  const BigInt B = static_cast<unsigned long>(N + 1);
  SubsetSumInstance out;
  out.k = N;
  out.S = static_cast<unsigned long>(N) * ipow(B, 3 * N);
  for (std::size_t l = 0; l < 3 * N; ++l) out.S += ipow(B, l);
  for (const auto& [i, j, h] : inst.triples)
    out.a.push_back(ipow(B, i) + ipow(B, j + N) + ipow(B, h + 2 * N) + ipow(B, 3 * N));
  std::sort(out.a.begin(), out.a.end());
  out.validate();
  return out;
}

bool has_perfect_matching(const ThreeDMInstance& inst) {
  inst.validate();
  const std::size_t N = inst.n_elems;
  std::vector<bool> used_y(N), used_z(N);
  std::function<bool(std::size_t)> fill = [&](std::size_t x) {
    if (x == N) return true;
    for (const auto& [i, j, h] : inst.triples) {
      if (i != x || used_y[j] || used_z[h]) continue;
      used_y[j] = used_z[h] = true;
      if (fill(x + 1)) return true;
      used_y[j] = used_z[h] = false;
    }
    return false;
  };
  return fill(0);
}

EssrResult brute_force_essr(const SubsetSumInstance& inst, std::size_t r_bound, std::size_t limit) {
  inst.validate();
  const std::size_t n = inst.n();
  const BigInt space = ipow(static_cast<unsigned long>(r_bound + 1), n);
  if (space > static_cast<unsigned long>(limit))
    throw Error(ErrorKind::SearchSpaceTooLarge, "enumeration space exceeds the limit");
  const std::size_t budget = std::max(inst.k, r_bound);

  std::vector<std::size_t> r(n, 0);
  std::optional<std::vector<std::size_t>> feasible;
  std::optional<std::vector<std::size_t>> violation;
  std::function<void(std::size_t, std::size_t, const BigInt&)> go = [&](std::size_t i, std::size_t left,
                                                                        const BigInt& sum) {
    if (violation || sum > inst.S) return;
    if (i == n) {
      if (sum != inst.S) return;
      const std::size_t count = budget - left;
      if (count != inst.k) {
        violation = r;
      } else if (!feasible) {
        feasible = r;
      }
      return;
    }
    for (std::size_t v = 0; v <= std::min(r_bound, left) && !violation; ++v) {
      r[i] = v;
      go(i + 1, left - v, sum + inst.a[i] * static_cast<unsigned long>(v));
    }
    r[i] = 0;
  };
  go(0, budget, BigInt(0));

  if (violation) return {EssrVerdict::PromiseViolated, *violation};
  if (feasible) return {EssrVerdict::Feasible, *feasible};
  return {EssrVerdict::Infeasible, {}};
}

std::string_view to_string(EssrVerdict v) {
  switch (v) {
    case EssrVerdict::Feasible: return "Feasible";
    case EssrVerdict::Infeasible: return "Infeasible";
    case EssrVerdict::PromiseViolated: return "PromiseViolated";
  }
  return "?";
}

std::string_view to_string(CircuitType t) {
  switch (t) {
    case CircuitType::Axis: return "type 1";
    case CircuitType::Summand: return "type 2";
    case CircuitType::Corner: return "type 3";
    case CircuitType::Unclassified: return "unclassified";
  }
  return "?";
}

}  // namespace cwalk
