#include "cwalk/geometry.hpp"

#include <ostream>

#include "cwalk/errors.hpp"

namespace cwalk {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b - a, c - a).sign();
}

Vec2 primitive(const Vec2& v) {
  if (v.is_zero()) throw Error(ErrorKind::BadParameter, "zero vector has no direction");
  const BigInt l = lcm(v.x.den(), v.y.den());
  BigInt nx = v.x.num() * (l / v.x.den());
  BigInt ny = v.y.num() * (l / v.y.den());
  BigInt g = gcd(nx, ny);
  nx /= g;
  ny /= g;
  return {Rational(nx), Rational(ny)};
}

Direction2 Direction2::of(const Vec2& v) {
  Vec2 p = primitive(v);
  if (p.x.sign() < 0 || (p.x.is_zero() && p.y.sign() < 0)) p = -p;
  return Direction2(std::move(p));
}

Slope slope_of(const Vec2& v) {
  if (v.x.is_zero()) return Vertical{};
  return v.y / v.x;
}

Slope slope_of(const Direction2& d) { return slope_of(d.vec()); }

Mat2 Mat2::inverse() const {
  const Rational det_value = det();
  if (det_value.is_zero()) throw Error(ErrorKind::SingularMap, "matrix is singular");
  const Rational inv = det_value.reciprocal();
  return {inv * d, -(inv * b), -(inv * c), inv * a};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

AffineMap2::AffineMap2(Mat2 h, Vec2 t) : h_(std::move(h)), t_(std::move(t)) {
  if (h_.det().is_zero()) throw Error(ErrorKind::SingularMap, "affine map is not invertible");
}

Point2 AffineMap2::operator()(const Point2& p) const {
  return {h_.a * p.x + h_.b * p.y + t_.x, h_.c * p.x + h_.d * p.y + t_.y};
}

AffineMap2 AffineMap2::after(const AffineMap2& inner) const {
  return {h_ * inner.h_, h_ * inner.t_ + t_};
}

Point2 affine_apply(const AffineMap2& m, const Point2& p) { return m(p); }

AffineMap2 affine_inverse(const AffineMap2& m) {
  Mat2 inv = m.h().inverse();
  Vec2 t = -(inv * m.t());
  return {std::move(inv), std::move(t)};
}

Vec2 pullback_cost(const AffineMap2& m, const Vec2& c) {
  return primitive(m.h().transpose().inverse() * c);
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const Direction2& d) { return os << d.vec(); }

}  // namespace cwalk
