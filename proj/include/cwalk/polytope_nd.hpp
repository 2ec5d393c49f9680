#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cwalk/rational.hpp"

namespace cwalk {

/// Point or direction in Q^d.
struct VecN {
  std::vector<Rational> v;

  std::size_t size() const { return v.size(); }
  const Rational& operator[](std::size_t i) const { return v[i]; }
  Rational& operator[](std::size_t i) { return v[i]; }
  bool is_zero() const;

  friend bool operator==(const VecN&, const VecN&) = default;
  friend auto operator<=>(const VecN&, const VecN&) = default;
};

Rational dot(const VecN& a, const VecN& b);

struct HRowN {
  VecN a;
  Rational b;
  friend bool operator==(const HRowN&, const HRowN&) = default;
};

/// {x in Q^d : a_i·x <= b_i}, assumed bounded. Used for lifts that are not
/// products, so only the operations the search needs are provided.
class HPolytopeN {
 public:
  /// Throws BadDimension when a row has the wrong length.
  HPolytopeN(std::size_t dim, std::vector<HRowN> rows);

  std::size_t dim() const { return dim_; }
  const std::vector<HRowN>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<HRowN> rows_;
};

bool contains(const HPolytopeN& p, const VecN& x);

/// Exact vertex enumeration over all d-row subsets, sorted.
std::vector<VecN> vertices(const HPolytopeN& p);

/// Whether every row defines a facet, i.e. its tight vertices span a
/// (d−1)-dimensional affine space.
bool all_rows_facets(const HPolytopeN& p);

/// Kernel directions of rank-(d−1) row subsystems, primitive integer and
/// lexicographically positive, sorted and unique.
std::vector<VecN> enumerate_circuits(const HPolytopeN& p);

/// p + λ* g with λ* the maximal feasible step; nullopt when λ* = 0.
std::optional<VecN> circuit_move(const HPolytopeN& p, const VecN& x, const VecN& g);

/// Primitive integer multiple of g with the same sign (g != 0).
VecN primitive(const VecN& g);

/// Solves the square system M x = r; nullopt if M is singular.
std::optional<VecN> solve(std::vector<VecN> M, VecN r);

/// Rank of a list of vectors.
std::size_t rank(std::vector<VecN> rows);

}  // namespace cwalk

template <>
struct std::hash<cwalk::VecN> {
  std::size_t operator()(const cwalk::VecN& p) const noexcept {
    std::size_t h = p.v.size();
    for (const auto& r : p.v) h = cwalk::hash_combine(h, r.hash());
    return h;
  }
};
