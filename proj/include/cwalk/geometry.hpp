#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <variant>

#include "cwalk/rational.hpp"

namespace cwalk {

/// Free vector in the plane. Also used for directed circuit steps and cost
/// vectors, which keep their sign.
struct Vec2 {
  Rational x;
  Rational y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;

  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;

  friend Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
};

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational dot(const Vec2& a, const Point2& p) { return a.x * p.x + a.y * p.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the turn a -> b -> c: positive for counterclockwise.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// Scales v by a positive factor so both components are coprime integers.
/// The sign of v is preserved. Throws BadParameter for the zero vector.
Vec2 primitive(const Vec2& v);

/// A circuit class: a nonzero direction up to scalar multiplication.
///
/// Stored as a primitive integer vector with (dx, dy) lexicographically
/// positive, i.e. dx > 0, or dx = 0 and dy > 0. Two parallel vectors map to
/// the same Direction2, so circuit sets compare and hash as plain sets.
class Direction2 {
 public:
  /// Canonical representative of the line spanned by v (v != 0).
  static Direction2 of(const Vec2& v);

  const Rational& dx() const { return v_.x; }
  const Rational& dy() const { return v_.y; }
  const Vec2& vec() const { return v_; }

  friend bool operator==(const Direction2&, const Direction2&) = default;
  friend auto operator<=>(const Direction2&, const Direction2&) = default;

 private:
  explicit Direction2(Vec2 v) : v_(std::move(v)) {}
  Vec2 v_;
};

struct Vertical {
  friend bool operator==(Vertical, Vertical) { return true; }
};
using Slope = std::variant<Rational, Vertical>;

Slope slope_of(const Direction2& d);
Slope slope_of(const Vec2& v);

/// 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 diag(const Rational& sx, const Rational& sy) { return {sx, 0, 0, sy}; }

  Rational det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  friend Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend Mat2 operator*(const Rational& s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
};

/// x -> h x + t with h invertible.
class AffineMap2 {
 public:
  AffineMap2() : h_(Mat2::identity()) {}
  /// Throws SingularMap when det(h) = 0.
  AffineMap2(Mat2 h, Vec2 t);

  static AffineMap2 identity() { return {}; }
  static AffineMap2 linear(Mat2 h) { return {std::move(h), Vec2{0, 0}}; }
  static AffineMap2 translation(Vec2 t) { return {Mat2::identity(), std::move(t)}; }

  const Mat2& h() const { return h_; }
  const Vec2& t() const { return t_; }

  Point2 operator()(const Point2& p) const;
  Vec2 apply_linear(const Vec2& v) const { return h_ * v; }

  /// (this ∘ inner)(x) = this(inner(x)).
  AffineMap2 after(const AffineMap2& inner) const;

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;

 private:
  Mat2 h_;
  Vec2 t_{0, 0};
};

Point2 affine_apply(const AffineMap2& m, const Point2& p);
AffineMap2 affine_inverse(const AffineMap2& m);

/// (h^T)^{-1} c, reduced to a primitive integer vector with its sign kept.
/// For all p, q: sign(c·(q−p)) = sign(result·(m(q)−m(p))).
Vec2 pullback_cost(const AffineMap2& m, const Vec2& c);

std::ostream& operator<<(std::ostream& os, const Vec2& v);
std::ostream& operator<<(std::ostream& os, const Point2& p);
std::ostream& operator<<(std::ostream& os, const Direction2& d);

}  // namespace cwalk

template <>
struct std::hash<cwalk::Point2> {
  std::size_t operator()(const cwalk::Point2& p) const noexcept {
    return cwalk::hash_combine(p.x.hash(), p.y.hash());
  }
};

template <>
struct std::hash<cwalk::Vec2> {
  std::size_t operator()(const cwalk::Vec2& v) const noexcept {
    return cwalk::hash_combine(v.x.hash(), v.y.hash());
  }
};

template <>
struct std::hash<cwalk::Direction2> {
  std::size_t operator()(const cwalk::Direction2& d) const noexcept {
    return std::hash<cwalk::Vec2>{}(d.vec());
  }
};
