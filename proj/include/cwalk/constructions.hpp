#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cwalk/geometry.hpp"
#include "cwalk/polygon.hpp"
#include "cwalk/polytope_nd.hpp"
#include "cwalk/walk.hpp"

namespace cwalk {

/// Polygon P_ℓ whose monotone circuit distance from u = (0,1) to the
/// c₀ = (1,0) optimum t is exactly ℓ.
struct PellArtifact {
  std::size_t ell;
  std::vector<std::array<BigInt, 2>> A;  // rows as generated, not reduced
  std::vector<BigInt> b;
  HPolygon h;
  Point2 u;
  Point2 w;
  Point2 t;
};

/// Throws BadParameter for ell < 1.
PellArtifact build_p_ell(std::size_t ell);

/// Exact subset sum with repetition: find r >= 0 with Σ r_i a_i = S, under
/// the promise that every solution has Σ r_i = k.
struct SubsetSumInstance {
  std::vector<BigInt> a;  // 1 <= a_1 < ... < a_n
  BigInt S;
  std::size_t k = 0;

  std::size_t n() const { return a.size(); }
  /// Throws BadInstance when the invariants fail.
  void validate() const;
};

struct CornerTransform {
  AffineMap2 map;
  Rational alpha, beta, gamma;
  Mat2 t1;      // rational rotation after the x-scaling
  Rational s1;  // smallest edge slope after the y-compression
  Rational box; // (s1/a_n)^(⌈Ck/2⌉+1)
  std::size_t Ck;
};

/// Affine map placing P_{Ck} as a thin corner gadget at height S. All
/// postconditions are checked; violations throw ConstructionFailed.
CornerTransform build_corner_transform(const SubsetSumInstance& inst, const BigInt& C);

struct SlopeChain {
  std::vector<Point2> v;  // v_0 .. v_n
  Rational beta;
  std::vector<BigInt> f;  // partial sums, f_0 = 0
};

/// Throws BadCost unless c.x < 0 < c.y, BadInstance if some a_i < 1,
/// ConstructionFailed if the coordinate bounds fail (possible when β = 1).
SlopeChain build_slope_chain(const SubsetSumInstance& inst, const Vec2& c);

/// ⌈max{8^t k^(t−1), 8 n^((t−1)/t)}⌉ for ε = 1/t, exact.
BigInt compute_gap_C(unsigned long t, const BigInt& n, const BigInt& k);

/// Whether 2((Ck)^(1−ε) + n^(1−ε))·2k <= Ck. Exact for t = 2; for larger t
/// the roots are rounded up, so true is a certificate and false may be
/// conservative.
bool gap_bound_holds(const BigInt& C, unsigned long t, const BigInt& n, const BigInt& k);

enum class CircuitType { Axis = 1, Summand = 2, Corner = 3, Unclassified = 0 };

struct ReductionInstance {
  HPolygon polygon;
  Point2 s;
  Vec2 c;
  Point2 t;
  Rational epsilon;
  BigInt C;
  std::size_t k;
  std::size_t n;
  SubsetSumInstance source;
  CornerTransform corner;
  SlopeChain chain;
  std::vector<Point2> corner_vertices;  // image of P_{Ck}
  std::vector<std::string> warnings;

  const VPolygon& vertices() const { return polygon.vertex_form(); }
  std::size_t Ck() const { return corner.Ck; }
};

ReductionInstance build_reduction(const SubsetSumInstance& inst, const BigInt& C);

CircuitType classify_circuit(const ReductionInstance& red, const Direction2& g);

/// (0,0) → (1,b_1) → (0,b_1) → … → (1,S) → t for a solution r of the
/// source instance; length 2·Σr_i. Throws BadParameter if r is no solution.
Walk witness_walk(const ReductionInstance& red, const std::vector<std::size_t>& r);

struct LiftedInstance {
  LiftedPolytope polytope;
  LiftedPoint s;
  LiftedVec c;
};

/// P × Δ_{d−2} with s and c extended by the last simplex coordinate.
LiftedInstance lift_instance(const HPolygon& h, const Point2& s, const Vec2& c, int d);

struct WedgeInstance {
  HPolytopeN polytope;
  VecN s;
  VecN c;
};

/// Alternative lift with m + d − 2 facets: repeatedly replaces the row F by
/// 0 <= z <= b_F − a_F·x, then appends −μ to the cost with μ large enough that
/// no circuit gaining height is improving. The base copy sits at z = 0.
WedgeInstance wedge_lift(const HPolygon& h, const Point2& s, const Vec2& c, int d, std::size_t facet = 0);

struct ThreeDMInstance {
  std::size_t n_elems = 0;
  std::vector<std::array<std::size_t, 3>> triples;

  void validate() const;
};

/// Throws TriviallyInfeasible when |E| < N.
SubsetSumInstance reduce_3dm_to_essr(const ThreeDMInstance& inst);

/// Exhaustive perfect matching test, used as an oracle.
bool has_perfect_matching(const ThreeDMInstance& inst);

enum class EssrVerdict { Feasible, Infeasible, PromiseViolated };

struct EssrResult {
  EssrVerdict verdict;
  std::vector<std::size_t> r;  // witness for Feasible / PromiseViolated
};

/// Enumerates r with r_i <= r_bound and Σr_i <= max(k, r_bound). A promise
/// violation takes precedence over a feasible witness. Throws
/// SearchSpaceTooLarge when (r_bound+1)^n exceeds limit.
EssrResult brute_force_essr(const SubsetSumInstance& inst, std::size_t r_bound,
                            std::size_t limit = 10'000'000);

std::string_view to_string(EssrVerdict v);
std::string_view to_string(CircuitType t);

}  // namespace cwalk
