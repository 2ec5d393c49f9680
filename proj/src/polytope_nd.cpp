#include "cwalk/polytope_nd.hpp"

#include <algorithm>

#include "cwalk/errors.hpp"

namespace cwalk {

namespace {

// Visits every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Determinant by fraction-exact Gaussian elimination.
Rational det(std::vector<VecN> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

}  // namespace

bool VecN::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational dot(const VecN& a, const VecN& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

HPolytopeN::HPolytopeN(std::size_t dim, std::vector<HRowN> rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim_ < 1) throw Error(ErrorKind::BadDimension, "dimension must be positive");
  for (const auto& r : rows_)
    if (r.a.size() != dim_) throw Error(ErrorKind::BadDimension, "row length does not match the dimension");
}

bool contains(const HPolytopeN& p, const VecN& x) {
  if (x.size() != p.dim()) return false;
  return std::all_of(p.rows().begin(), p.rows().end(), [&](const HRowN& r) { return dot(r.a, x) <= r.b; });
}

std::optional<VecN> solve(std::vector<VecN> M, VecN r) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      const Rational f = M[row][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
      r[row] -= f * r[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) r[i] /= M[i][i];
  return r;
}

std::size_t rank(std::vector<VecN> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows.size(); ++col) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rk]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[rk][col];
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

std::vector<VecN> vertices(const HPolytopeN& p) {
  std::vector<VecN> out;
  const std::size_t d = p.dim();
  for_each_subset(p.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<VecN> M;
    VecN r;
    for (std::size_t i : idx) {
      M.push_back(p.rows()[i].a);
      r.v.push_back(p.rows()[i].b);
    }
    auto x = solve(std::move(M), std::move(r));
    if (x && contains(p, *x)) out.push_back(std::move(*x));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool all_rows_facets(const HPolytopeN& p) {
  const std::vector<VecN> vs = vertices(p);
  for (const auto& row : p.rows()) {
    std::vector<VecN> diffs;
    const VecN* base = nullptr;
    for (const auto& v : vs) {
      if (dot(row.a, v) != row.b) continue;
      if (base == nullptr) {
        base = &v;
        continue;
      }
      VecN d = v;
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= (*base)[i];
      diffs.push_back(std::move(d));
    }
    if (base == nullptr || rank(std::move(diffs)) != p.dim() - 1) return false;
  }
  return true;
}

VecN primitive(const VecN& g) {
  if (g.is_zero()) throw Error(ErrorKind::BadParameter, "zero vector has no direction");
  BigInt l = 1;
  for (const auto& x : g.v) l = lcm(l, x.den());
  std::vector<BigInt> ints;
  BigInt gg = 0;
  for (const auto& x : g.v) {
    ints.push_back(x.num() * (l / x.den()));
    gg = gcd(gg, ints.back());
  }
  VecN out;
  for (const auto& x : ints) out.v.emplace_back(BigInt(x / gg));
  return out;
}

std::vector<VecN> enumerate_circuits(const HPolytopeN& p) {
  const std::size_t d = p.dim();
  std::vector<VecN> out;
  for_each_subset(p.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    // Kernel of the (d−1)×d subsystem via signed maximal minors.
    VecN k;
    for (std::size_t col = 0; col < d; ++col) {
      std::vector<VecN> minor;
      for (std::size_t i : idx) {
        VecN row;
        for (std::size_t j = 0; j < d; ++j)
          if (j != col) row.v.push_back(p.rows()[i].a[j]);
        minor.push_back(std::move(row));
      }
      Rational m = det(std::move(minor));
      k.v.push_back(col % 2 == 0 ? m : -m);
    }
    if (k.is_zero()) return;
    VecN g = primitive(k);
    const auto first = std::find_if(g.v.begin(), g.v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (first->sign() < 0)
      for (auto& x : g.v) x = -x;
    out.push_back(std::move(g));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<VecN> circuit_move(const HPolytopeN& p, const VecN& x, const VecN& g) {
  std::optional<Rational> lambda;
  for (const auto& r : p.rows()) {
    const Rational ag = dot(r.a, g);
    if (ag.sign() <= 0) continue;
    Rational ratio = (r.b - dot(r.a, x)) / ag;
    if (!lambda || ratio < *lambda) lambda = std::move(ratio);
  }
  if (!lambda) throw Error(ErrorKind::UnboundedDirection, "no row bounds the ray");
  if (lambda->sign() <= 0) return std::nullopt;
  VecN y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += *lambda * g[i];
  return y;
}

}  // namespace cwalk
