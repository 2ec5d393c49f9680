#include "cwalk/rational.hpp"

#include <cctype>
#include <ostream>

#include "cwalk/errors.hpp"

namespace cwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::DegenerateHull: return "DegenerateHull";
    case ErrorKind::UnboundedOrEmpty: return "UnboundedOrEmpty";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::UnboundedDirection: return "UnboundedDirection";
    case ErrorKind::NotACircuit: return "NotACircuit";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::AmbiguousOptimum: return "AmbiguousOptimum";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BadCost: return "BadCost";
    case ErrorKind::BadInstance: return "BadInstance";
    case ErrorKind::TriviallyInfeasible: return "TriviallyInfeasible";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
  }
  return "Error";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::BadParameter, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw Error(ErrorKind::Parse, "malformed rational '" + original + "'");
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + original + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::BadParameter, "reciprocal of zero");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::BadParameter, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

std::size_t Rational::hash() const {
  // FNV-style mix over the limbs of numerator and denominator.
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](mpz_srcptr z) {
    const std::size_t n = mpz_size(z);
    const mp_limb_t* limbs = mpz_limbs_read(z);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ static_cast<std::size_t>(limbs[i])) * 1099511628211ULL;
    h = (h ^ static_cast<std::size_t>(mpz_sgn(z) + 2)) * 1099511628211ULL;
  };
  mix(q_.get_num_mpz_t());
  mix(q_.get_den_mpz_t());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned long exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(n, d);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

BigInt floor_root(const BigInt& x, unsigned long n) {
  if (x < 0 || n == 0) throw Error(ErrorKind::BadParameter, "floor_root domain");
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
  return r;
}

BigInt ceil_root(const BigInt& x, unsigned long n) {
  BigInt r = floor_root(x, n);
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), n);
  if (p != x) r += 1;
  return r;
}

}  // namespace cwalk
