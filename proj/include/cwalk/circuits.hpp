#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cwalk/geometry.hpp"
#include "cwalk/polygon.hpp"
#include "cwalk/walk.hpp"

namespace cwalk {

/// Circuit classes of a polygon, sorted and free of duplicates.
using CircuitSet = std::vector<Direction2>;

/// Kernel direction of every row. For a non-redundant HPolygon these are
/// exactly the edge directions.
CircuitSet enumerate_circuits(const HPolygon& h);

// Circuit classes of P × Δ_k: circuits of either factor padded with zeros.
struct BaseCircuit {
  Direction2 g;
  friend bool operator==(const BaseCircuit&, const BaseCircuit&) = default;
};
struct SimplexAxis {
  std::size_t i;
  friend bool operator==(const SimplexAxis&, const SimplexAxis&) = default;
};
struct SimplexDiff {
  std::size_t i, j;  // i < j, direction e_i − e_j
  friend bool operator==(const SimplexDiff&, const SimplexDiff&) = default;
};
using LiftedCircuit = std::variant<BaseCircuit, SimplexAxis, SimplexDiff>;

std::vector<LiftedCircuit> enumerate_lifted_circuits(const LiftedPolytope& lp);
LiftedVec as_vector(const LiftedCircuit& circuit, std::size_t extra_dims);

struct StepCertificate {
  Rational lambda;
  std::vector<std::size_t> tight_rows;  // every row minimizing the ratio
};

/// λ* = min over rows with a·g > 0 of (b − a·p)/(a·g), with the rows that
/// attain it. Throws UnboundedDirection if no row bounds the ray.
StepCertificate max_step_certificate(const HPolygon& h, const Point2& p, const Vec2& g);
Rational max_step(const HPolygon& h, const Point2& p, const Vec2& g);

bool is_circuit(const HPolygon& h, const Vec2& g);

/// p + λ*·g, or nullopt when λ* = 0 (a circuit move needs a positive step).
/// Throws NotACircuit when g is not parallel to an edge.
std::optional<Point2> circuit_move(const HPolygon& h, const Point2& p, const Vec2& g);

/// Unchecked variant used by the search once directions are known circuits.
std::optional<Point2> move_along(const HPolygon& h, const Point2& p, const Vec2& g);

std::optional<LiftedPoint> circuit_move(const LiftedPolytope& lp, const LiftedPoint& p, const LiftedVec& g);

/// Orients every class so that c strictly increases along it; classes with
/// c·g = 0 are dropped. Result is sorted lexicographically.
std::vector<Vec2> monotone_directions(const CircuitSet& cs, const Vec2& c);
std::vector<LiftedVec> monotone_directions(const std::vector<LiftedCircuit>& cs, std::size_t extra_dims,
                                           const LiftedVec& c);

/// Boundary walk from vertex s to the unique c-maximal vertex. Throws
/// NotAVertex or AmbiguousOptimum when the preconditions fail.
Walk monotone_edge_walk(const HPolygon& h, const Point2& s, const Vec2& c);

}  // namespace cwalk
