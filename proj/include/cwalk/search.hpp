#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cwalk/circuits.hpp"
#include "cwalk/geometry.hpp"
#include "cwalk/polygon.hpp"
#include "cwalk/polytope_nd.hpp"
#include "cwalk/walk.hpp"

namespace cwalk {

struct SearchConfig {
  std::size_t max_depth = 0;
  std::size_t node_cap = 1'000'000;
};

enum class SearchOutcome { Found, NotFoundWithinDepth, NodeCapExceeded };

std::string_view to_string(SearchOutcome o);

template <class W>
struct BasicDistanceResult {
  SearchOutcome outcome = SearchOutcome::NotFoundWithinDepth;
  std::optional<W> walk;      // set iff outcome == Found
  std::size_t depth = 0;      // searched depth bound
  std::size_t explored = 0;   // distinct states discovered, start included

  bool found() const { return outcome == SearchOutcome::Found; }
};

using DistanceResult = BasicDistanceResult<Walk>;
using LiftedDistanceResult = BasicDistanceResult<LiftedWalk>;
using WalkN = BasicWalk<VecN, VecN>;
using DistanceResultN = BasicDistanceResult<WalkN>;

struct Optimum {
  Rational value;
  std::vector<Point2> maximizers;  // vertices attaining the value, vertex order
};

/// Throws BadCost for c = 0.
Optimum optimal_value(const HPolygon& h, const Vec2& c);
Rational optimal_value(const LiftedPolytope& lp, const LiftedVec& c);

/// Breadth-first search over maximal monotone circuit moves with exact
/// deduplication. Returns a shortest walk from s to any c-maximal point; among
/// shortest walks, the one with the lexicographically smallest step sequence.
/// Frontier layers are expanded in parallel and merged in frontier order, so
/// the result matches shortest_monotone_walk_serial exactly.
DistanceResult shortest_monotone_walk(const HPolygon& h, const Point2& s, const Vec2& c,
                                      const SearchConfig& cfg);
/// Single-threaded FIFO reference.
DistanceResult shortest_monotone_walk_serial(const HPolygon& h, const Point2& s, const Vec2& c,
                                             const SearchConfig& cfg);

LiftedDistanceResult shortest_monotone_walk(const LiftedPolytope& lp, const LiftedPoint& s,
                                            const LiftedVec& c, const SearchConfig& cfg);
LiftedDistanceResult shortest_monotone_walk_serial(const LiftedPolytope& lp, const LiftedPoint& s,
                                                   const LiftedVec& c, const SearchConfig& cfg);

/// General d-dimensional polytopes (vertex enumeration decides the goal).
DistanceResultN shortest_monotone_walk(const HPolytopeN& p, const VecN& s, const VecN& c, const SearchConfig& cfg);
DistanceResultN shortest_monotone_walk_serial(const HPolytopeN& p, const VecN& s, const VecN& c,
                                              const SearchConfig& cfg);

struct WalkCheck {
  bool ok = true;
  std::size_t index = 0;  // first failing point or step
  std::string reason;

  explicit operator bool() const { return ok; }
};

WalkCheck is_valid_monotone_walk(const HPolygon& h, const Vec2& c, const Walk& w);
WalkCheck is_valid_monotone_walk(const LiftedPolytope& lp, const LiftedVec& c, const LiftedWalk& w);
WalkCheck is_valid_monotone_walk(const HPolytopeN& p, const VecN& c, const WalkN& w);

/// Shortest walk if one of length <= K reaches the optimum, otherwise the
/// monotone edge walk. Throws SearchSpaceTooLarge if the depth-K search hits
/// node_cap before finishing.
Walk approx_monotone_walk(const HPolygon& h, const Point2& s, const Vec2& c, std::size_t K,
                          std::size_t node_cap = 10'000'000);

/// Maps every point through m and every step to primitive(H g).
Walk transform_walk(const AffineMap2& m, const Walk& w);

}  // namespace cwalk
