#include "cwalk/search.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <limits>
#include <string>
#include <unordered_set>

#include "cwalk/errors.hpp"

namespace cwalk {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct PolygonSpace {
  using Point = Point2;
  using Step = Vec2;

  const HPolygon& h;
  Vec2 c;
  std::vector<Vec2> dirs;
  Rational goal;

  std::optional<Point2> move(const Point2& p, std::size_t k) const { return move_along(h, p, dirs[k]); }
  bool is_goal(const Point2& p) const { return dot(c, p) == goal; }
};

struct LiftedSpace {
  using Point = LiftedPoint;
  using Step = LiftedVec;

  const LiftedPolytope& lp;
  LiftedVec c;
  std::vector<LiftedVec> dirs;
  Rational goal;

  std::optional<LiftedPoint> move(const LiftedPoint& p, std::size_t k) const {
    return circuit_move(lp, p, dirs[k]);
  }
  bool is_goal(const LiftedPoint& p) const { return dot(c, p) == goal; }
};

struct SpaceN {
  using Point = VecN;
  using Step = VecN;

  const HPolytopeN& p;
  VecN c;
  std::vector<VecN> dirs;
  Rational goal;

  std::optional<VecN> move(const VecN& x, std::size_t k) const { return circuit_move(p, x, dirs[k]); }
  bool is_goal(const VecN& x) const { return dot(c, x) == goal; }
};

template <class Space>
class Bfs {
 public:
  using Point = typename Space::Point;
  using WalkT = BasicWalk<Point, typename Space::Step>;
  using Result = BasicDistanceResult<WalkT>;

  Bfs(const Space& space, const SearchConfig& cfg) : sp_(space), cfg_(cfg) {
    res_.depth = cfg.max_depth;
  }

  Result serial(const Point& s) {
    if (start(s)) return res_;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (nodes_[u].depth == cfg_.max_depth) continue;
      for (std::size_t k = 0; k < sp_.dirs.size(); ++k) {
        auto q = sp_.move(nodes_[u].p, k);
        if (!q) continue;
        const bool goal = sp_.is_goal(*q);
        if (!discover(std::move(*q), u, k, goal)) continue;
        if (res_.outcome != SearchOutcome::NotFoundWithinDepth) return res_;
        queue.push_back(nodes_.size() - 1);
      }
    }
    return res_;
  }

  Result layered(const Point& s) {
    if (start(s)) return res_;
    struct Successor {
      std::size_t step;
      Point p;
      bool goal;
    };
    std::vector<std::size_t> frontier{0};
    for (std::size_t d = 0; d < cfg_.max_depth && !frontier.empty(); ++d) {
      std::vector<std::vector<Successor>> succ(frontier.size());
      std::exception_ptr failure;
      const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
          const Point& p = nodes_[frontier[i]].p;
          for (std::size_t k = 0; k < sp_.dirs.size(); ++k) {
            auto q = sp_.move(p, k);
            if (!q) continue;
            const bool goal = sp_.is_goal(*q);
            succ[i].push_back({k, std::move(*q), goal});
          }
        } catch (...) {
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);

      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (auto& sc : succ[i]) {
          if (!discover(std::move(sc.p), frontier[i], sc.step, sc.goal)) continue;
          if (res_.outcome != SearchOutcome::NotFoundWithinDepth) return res_;
          next.push_back(nodes_.size() - 1);
        }
      }
      frontier = std::move(next);
    }
    return res_;
  }

 private:
  struct Node {
    Point p;
    std::size_t parent;
    std::size_t step;
    std::size_t depth;
  };

  // Returns true when the search is already decided at the start point.
  bool start(const Point& s) {
    visited_.insert(s);
    nodes_.push_back({s, kNone, kNone, 0});
    res_.explored = 1;
    if (res_.explored > cfg_.node_cap) {
      res_.outcome = SearchOutcome::NodeCapExceeded;
      return true;
    }
    if (sp_.is_goal(s)) {
      finish(0);
      return true;
    }
    return false;
  }

  // Records a newly reached point; false if it was seen before.
  bool discover(Point&& q, std::size_t parent, std::size_t step, bool goal) {
    if (!visited_.insert(q).second) return false;
    nodes_.push_back({std::move(q), parent, step, nodes_[parent].depth + 1});
    ++res_.explored;
    if (res_.explored > cfg_.node_cap) {
      res_.outcome = SearchOutcome::NodeCapExceeded;
    } else if (goal) {
      finish(nodes_.size() - 1);
    }
    return true;
  }

  void finish(std::size_t u) {
    WalkT w;
    for (std::size_t v = u; v != kNone; v = nodes_[v].parent) {
      w.points.push_back(nodes_[v].p);
      if (nodes_[v].step != kNone) w.steps.push_back(sp_.dirs[nodes_[v].step]);
    }
    std::reverse(w.points.begin(), w.points.end());
    std::reverse(w.steps.begin(), w.steps.end());
    res_.outcome = SearchOutcome::Found;
    res_.walk = std::move(w);
  }

  const Space& sp_;
  SearchConfig cfg_;
  Result res_;
  std::vector<Node> nodes_;
  std::unordered_set<Point> visited_;
};

void check_config(const SearchConfig& cfg) {
  if (cfg.node_cap < 1) throw Error(ErrorKind::BadParameter, "node_cap must be at least 1");
}

PolygonSpace polygon_space(const HPolygon& h, const Point2& s, const Vec2& c) {
  if (!contains(h, s)) throw Error(ErrorKind::BadParameter, "start point lies outside the polygon");
  Optimum opt = optimal_value(h, c);
  return {h, c, monotone_directions(enumerate_circuits(h), c), std::move(opt.value)};
}

LiftedSpace lifted_space(const LiftedPolytope& lp, const LiftedPoint& s, const LiftedVec& c) {
  if (c.simplex.size() != lp.extra_dims) throw Error(ErrorKind::BadDimension, "cost has wrong dimension");
  if (!contains(lp, s)) throw Error(ErrorKind::BadParameter, "start point lies outside the polytope");
  Rational goal = optimal_value(lp, c);
  return {lp, c, monotone_directions(enumerate_lifted_circuits(lp), lp.extra_dims, c), std::move(goal)};
}

SpaceN space_n(const HPolytopeN& p, const VecN& s, const VecN& c) {
  if (c.size() != p.dim()) throw Error(ErrorKind::BadDimension, "cost has wrong dimension");
  if (c.is_zero()) throw Error(ErrorKind::BadCost, "cost vector is zero");
  if (!contains(p, s)) throw Error(ErrorKind::BadParameter, "start point lies outside the polytope");
  const std::vector<VecN> vs = vertices(p);
  if (vs.empty()) throw Error(ErrorKind::UnboundedOrEmpty, "polytope has no vertices");
  Rational goal = dot(c, vs.front());
  for (const auto& v : vs) goal = std::max(goal, dot(c, v));
  std::vector<VecN> dirs;
  for (const auto& g : enumerate_circuits(p)) {
    const int sg = dot(c, g).sign();
    if (sg == 0) continue;
    VecN d = g;
    if (sg < 0)
      for (auto& x : d.v) x = -x;
    dirs.push_back(std::move(d));
  }
  std::sort(dirs.begin(), dirs.end());
  return {p, c, std::move(dirs), std::move(goal)};
}

WalkCheck fail(std::size_t index, std::string reason) { return {false, index, std::move(reason)}; }

bool follows(const Vec2& d, const Vec2& g) {
  return !d.is_zero() && cross(d, g).is_zero() && dot(d, g).sign() > 0;
}

bool is_lifted_circuit(const LiftedPolytope& lp, const LiftedVec& g) {
  std::vector<Rational> nz;
  for (const auto& y : g.simplex)
    if (!y.is_zero()) nz.push_back(y);
  if (nz.empty()) return is_circuit(lp.base, g.base);
  if (!g.base.is_zero()) return false;
  return nz.size() == 1 || (nz.size() == 2 && nz[0] == -nz[1]);
}

}  // namespace

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "Found";
    case SearchOutcome::NotFoundWithinDepth: return "NotFoundWithinDepth";
    case SearchOutcome::NodeCapExceeded: return "NodeCapExceeded";
  }
  return "?";
}

Optimum optimal_value(const HPolygon& h, const Vec2& c) {
  if (c.is_zero()) throw Error(ErrorKind::BadCost, "cost vector is zero");
  const auto& vs = h.vertex_form().vertices();
  Optimum opt{dot(c, vs.front()), {}};
  for (const auto& v : vs) opt.value = std::max(opt.value, dot(c, v));
  for (const auto& v : vs)
    if (dot(c, v) == opt.value) opt.maximizers.push_back(v);
  return opt;
}

Rational optimal_value(const LiftedPolytope& lp, const LiftedVec& c) {
  bool nonzero = !c.base.is_zero();
  Rational best_simplex = 0;
  for (const auto& y : c.simplex) {
    nonzero = nonzero || !y.is_zero();
    best_simplex = std::max(best_simplex, y);
  }
  if (!nonzero) throw Error(ErrorKind::BadCost, "cost vector is zero");
  const Rational best_base = c.base.is_zero() ? Rational(0) : optimal_value(lp.base, c.base).value;
  return best_base + best_simplex;
}

DistanceResult shortest_monotone_walk(const HPolygon& h, const Point2& s, const Vec2& c,
                                      const SearchConfig& cfg) {
  check_config(cfg);
  const PolygonSpace sp = polygon_space(h, s, c);
  return Bfs<PolygonSpace>(sp, cfg).layered(s);
}

DistanceResult shortest_monotone_walk_serial(const HPolygon& h, const Point2& s, const Vec2& c,
                                             const SearchConfig& cfg) {
  check_config(cfg);
  const PolygonSpace sp = polygon_space(h, s, c);
  return Bfs<PolygonSpace>(sp, cfg).serial(s);
}

LiftedDistanceResult shortest_monotone_walk(const LiftedPolytope& lp, const LiftedPoint& s,
                                            const LiftedVec& c, const SearchConfig& cfg) {
  check_config(cfg);
  const LiftedSpace sp = lifted_space(lp, s, c);
  return Bfs<LiftedSpace>(sp, cfg).layered(s);
}

LiftedDistanceResult shortest_monotone_walk_serial(const LiftedPolytope& lp, const LiftedPoint& s,
                                                   const LiftedVec& c, const SearchConfig& cfg) {
  check_config(cfg);
  const LiftedSpace sp = lifted_space(lp, s, c);
  return Bfs<LiftedSpace>(sp, cfg).serial(s);
}

DistanceResultN shortest_monotone_walk(const HPolytopeN& p, const VecN& s, const VecN& c, const SearchConfig& cfg) {
  check_config(cfg);
  const SpaceN sp = space_n(p, s, c);
  return Bfs<SpaceN>(sp, cfg).layered(s);
}

DistanceResultN shortest_monotone_walk_serial(const HPolytopeN& p, const VecN& s, const VecN& c,
                                              const SearchConfig& cfg) {
  check_config(cfg);
  const SpaceN sp = space_n(p, s, c);
  return Bfs<SpaceN>(sp, cfg).serial(s);
}

WalkCheck is_valid_monotone_walk(const HPolytopeN& p, const VecN& c, const WalkN& w) {
  if (w.points.empty()) return fail(0, "walk has no points");
  if (w.steps.size() + 1 != w.points.size()) return fail(0, "step count does not match point count");
  for (std::size_t i = 0; i < w.points.size(); ++i)
    if (!contains(p, w.points[i])) return fail(i, "point " + std::to_string(i) + " lies outside the polytope");
  const std::vector<VecN> circuits = enumerate_circuits(p);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const std::string tag = "step " + std::to_string(i);
    const VecN& g = w.steps[i];
    if (g.size() != p.dim() || g.is_zero()) return fail(i, tag + " is not a circuit");
    VecN canon = primitive(g);
    const auto first = std::find_if(canon.v.begin(), canon.v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (first->sign() < 0)
      for (auto& x : canon.v) x = -x;
    if (!std::binary_search(circuits.begin(), circuits.end(), canon)) return fail(i, tag + " is not a circuit");
    if (dot(c, g).sign() <= 0) return fail(i, tag + " does not increase the objective");
    const auto m = circuit_move(p, w.points[i], g);
    if (!m) return fail(i, tag + " is infeasible");
    if (*m != w.points[i + 1]) return fail(i, tag + " is not maximal");
  }
  return {};
}

WalkCheck is_valid_monotone_walk(const HPolygon& h, const Vec2& c, const Walk& w) {
  if (w.points.empty()) return fail(0, "walk has no points");
  if (w.steps.size() + 1 != w.points.size()) return fail(0, "step count does not match point count");
  for (std::size_t i = 0; i < w.points.size(); ++i)
    if (!contains(h, w.points[i])) return fail(i, "point " + std::to_string(i) + " lies outside the polygon");
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const std::string tag = "step " + std::to_string(i);
    const Point2& p = w.points[i];
    const Point2& q = w.points[i + 1];
    const Vec2& g = w.steps[i];
    if (!is_circuit(h, g)) return fail(i, tag + " is not a circuit");
    if (!follows(q - p, g)) return fail(i, tag + " does not move along its direction");
    if (dot(c, g).sign() <= 0) return fail(i, tag + " does not increase the objective");
    const auto m = move_along(h, p, g);
    if (!m) return fail(i, tag + " is infeasible");
    if (*m != q) return fail(i, tag + " is not maximal");
  }
  return {};
}

WalkCheck is_valid_monotone_walk(const LiftedPolytope& lp, const LiftedVec& c, const LiftedWalk& w) {
  if (w.points.empty()) return fail(0, "walk has no points");
  if (w.steps.size() + 1 != w.points.size()) return fail(0, "step count does not match point count");
  for (std::size_t i = 0; i < w.points.size(); ++i)
    if (!contains(lp, w.points[i])) return fail(i, "point " + std::to_string(i) + " lies outside the polytope");
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const std::string tag = "step " + std::to_string(i);
    const LiftedPoint& p = w.points[i];
    const LiftedPoint& q = w.points[i + 1];
    const LiftedVec& g = w.steps[i];
    if (g.simplex.size() != lp.extra_dims || !is_lifted_circuit(lp, g)) return fail(i, tag + " is not a circuit");
    if (dot(c, g).sign() <= 0) return fail(i, tag + " does not increase the objective");
    const auto m = circuit_move(lp, p, g);
    if (!m) return fail(i, tag + " is infeasible");
    if (*m != q) return fail(i, tag + " is not maximal");
  }
  return {};
}

Walk approx_monotone_walk(const HPolygon& h, const Point2& s, const Vec2& c, std::size_t K,
                          std::size_t node_cap) {
  if (K < 1) throw Error(ErrorKind::BadParameter, "K must be at least 1");
  if (h.vertex_form().index_of(s) == h.vertex_form().size())
    throw Error(ErrorKind::NotAVertex, "start point is not a vertex");
  if (optimal_value(h, c).maximizers.size() != 1)
    throw Error(ErrorKind::AmbiguousOptimum, "optimum is attained on an edge");
  DistanceResult r = shortest_monotone_walk(h, s, c, {K, node_cap});
  if (r.outcome == SearchOutcome::Found) return std::move(*r.walk);
  if (r.outcome == SearchOutcome::NodeCapExceeded)
    throw Error(ErrorKind::SearchSpaceTooLarge, "depth-bounded search exceeded the node cap");
  return monotone_edge_walk(h, s, c);
}

Walk transform_walk(const AffineMap2& m, const Walk& w) {
  Walk out;
  out.points.reserve(w.points.size());
  out.steps.reserve(w.steps.size());
  for (const auto& p : w.points) out.points.push_back(m(p));
  for (const auto& g : w.steps) out.steps.push_back(primitive(m.apply_linear(g)));
  return out;
}

}  // namespace cwalk
