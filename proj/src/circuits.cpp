#include "cwalk/circuits.hpp"

#include <algorithm>
#include <string>

#include "cwalk/errors.hpp"

namespace cwalk {

CircuitSet enumerate_circuits(const HPolygon& h) {
  CircuitSet out;
  out.reserve(h.size());
  for (const auto& r : h.rows()) out.push_back(Direction2::of(Vec2{-r.a.y, r.a.x}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LiftedCircuit> enumerate_lifted_circuits(const LiftedPolytope& lp) {
  std::vector<LiftedCircuit> out;
  for (auto& g : enumerate_circuits(lp.base)) out.emplace_back(BaseCircuit{std::move(g)});
  for (std::size_t i = 0; i < lp.extra_dims; ++i) out.emplace_back(SimplexAxis{i});
  for (std::size_t i = 0; i < lp.extra_dims; ++i)
    for (std::size_t j = i + 1; j < lp.extra_dims; ++j) out.emplace_back(SimplexDiff{i, j});
  return out;
}

LiftedVec as_vector(const LiftedCircuit& circuit, std::size_t extra_dims) {
  LiftedVec v{{0, 0}, std::vector<Rational>(extra_dims)};
  if (const auto* b = std::get_if<BaseCircuit>(&circuit)) {
    v.base = b->g.vec();
  } else if (const auto* a = std::get_if<SimplexAxis>(&circuit)) {
    v.simplex.at(a->i) = 1;
  } else {
    const auto& d = std::get<SimplexDiff>(circuit);
    v.simplex.at(d.i) = 1;
    v.simplex.at(d.j) = -1;
  }
  return v;
}

StepCertificate max_step_certificate(const HPolygon& h, const Point2& p, const Vec2& g) {
  StepCertificate cert;
  bool bounded = false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const HRow& r = h.rows()[i];
    const Rational ag = dot(r.a, g);
    if (ag.sign() <= 0) continue;
    Rational ratio = (r.b - dot(r.a, p)) / ag;
    if (!bounded || ratio < cert.lambda) {
      cert.lambda = std::move(ratio);
      cert.tight_rows.assign(1, i);
      bounded = true;
    } else if (ratio == cert.lambda) {
      cert.tight_rows.push_back(i);
    }
  }
  if (!bounded) throw Error(ErrorKind::UnboundedDirection, "no row bounds the ray");
  return cert;
}

Rational max_step(const HPolygon& h, const Point2& p, const Vec2& g) {
  return max_step_certificate(h, p, g).lambda;
}

bool is_circuit(const HPolygon& h, const Vec2& g) {
  if (g.is_zero()) return false;
  return std::any_of(h.rows().begin(), h.rows().end(),
                     [&](const HRow& r) { return dot(r.a, g).is_zero(); });
}

std::optional<Point2> move_along(const HPolygon& h, const Point2& p, const Vec2& g) {
  const Rational lambda = max_step(h, p, g);
  if (lambda.sign() <= 0) return std::nullopt;
  return p + lambda * g;
}

std::optional<Point2> circuit_move(const HPolygon& h, const Point2& p, const Vec2& g) {
  if (!is_circuit(h, g)) throw Error(ErrorKind::NotACircuit, "direction is not parallel to an edge");
  return move_along(h, p, g);
}

std::optional<LiftedPoint> circuit_move(const LiftedPolytope& lp, const LiftedPoint& p, const LiftedVec& g) {
  if (g.simplex.size() != lp.extra_dims || p.simplex.size() != lp.extra_dims)
    throw Error(ErrorKind::BadDimension, "vector does not match the lifted dimension");
  std::optional<Rational> lambda;
  auto offer = [&](Rational r) {
    if (!lambda || r < *lambda) lambda = std::move(r);
  };
  for (const auto& r : lp.base.rows()) {
    const Rational ag = dot(r.a, g.base);
    if (ag.sign() > 0) offer((r.b - dot(r.a, p.base)) / ag);
  }
  Rational sum_g = 0, sum_p = 0;
  for (std::size_t i = 0; i < lp.extra_dims; ++i) {
    if (g.simplex[i].sign() < 0) offer(p.simplex[i] / -g.simplex[i]);
    sum_g += g.simplex[i];
    sum_p += p.simplex[i];
  }
  if (sum_g.sign() > 0) offer((Rational(1) - sum_p) / sum_g);
  if (!lambda) throw Error(ErrorKind::UnboundedDirection, "no row bounds the ray");
  if (lambda->sign() <= 0) return std::nullopt;

  LiftedPoint q{p.base + *lambda * g.base, p.simplex};
  for (std::size_t i = 0; i < lp.extra_dims; ++i) q.simplex[i] += *lambda * g.simplex[i];
  return q;
}

std::vector<Vec2> monotone_directions(const CircuitSet& cs, const Vec2& c) {
  std::vector<Vec2> out;
  for (const auto& d : cs) {
    const int s = dot(c, d.vec()).sign();
    if (s > 0) out.push_back(d.vec());
    if (s < 0) out.push_back(-d.vec());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LiftedVec> monotone_directions(const std::vector<LiftedCircuit>& cs, std::size_t extra_dims,
                                           const LiftedVec& c) {
  std::vector<LiftedVec> out;
  for (const auto& circuit : cs) {
    LiftedVec v = as_vector(circuit, extra_dims);
    const int s = dot(c, v).sign();
    if (s == 0) continue;
    if (s < 0) {
      v.base = -v.base;
      for (auto& y : v.simplex) y = -y;
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Walk monotone_edge_walk(const HPolygon& h, const Point2& s, const Vec2& c) {
  if (c.is_zero()) throw Error(ErrorKind::BadCost, "cost vector is zero");
  const VPolygon& v = h.vertex_form();
  const std::size_t n = v.size();
  const std::size_t start = v.index_of(s);
  if (start == n) throw Error(ErrorKind::NotAVertex, "start point is not a vertex");

  Rational best = dot(c, v[0]);
  std::size_t maximizers = 0;
  for (const auto& p : v.vertices()) {
    const Rational val = dot(c, p);
    if (val > best) {
      best = val;
      maximizers = 1;
    } else if (val == best) {
      ++maximizers;
    }
  }
  if (maximizers > 1) throw Error(ErrorKind::AmbiguousOptimum, "optimum is attained on an edge");

  Walk w;
  w.points.push_back(s);
  if (dot(c, s) == best) return w;

  const Rational here = dot(c, s);
  const Rational gain_next = dot(c, v.next(start)) - here;
  const Rational gain_prev = dot(c, v.prev(start)) - here;
  bool forward;
  if (gain_next.sign() > 0 && gain_prev.sign() > 0) {
    if (gain_next != gain_prev) {
      forward = gain_next > gain_prev;
    } else {
      forward = primitive(v.next(start) - s) < primitive(v.prev(start) - s);
    }
  } else {
    forward = gain_next.sign() > 0;
  }

  std::size_t i = start;
  while (dot(c, v[i]) != best) {
    const std::size_t j = forward ? (i + 1) % n : (i + n - 1) % n;
    w.steps.push_back(primitive(v[j] - v[i]));
    w.points.push_back(v[j]);
    i = j;
  }
  return w;
}

}  // namespace cwalk
