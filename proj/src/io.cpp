#include "cwalk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cwalk/errors.hpp"

namespace cwalk {

namespace {

struct Line {
  std::size_t no;
  std::string text;
  std::vector<std::string> tok;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++no;
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (!tok.empty()) out.push_back({no, std::move(line), std::move(tok)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  bool at_end() const { return pos_ == lines_.size(); }
  bool peek(std::string_view keyword) const { return !at_end() && lines_[pos_].tok[0] == keyword; }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().no; }

  // Next line, which must start with `keyword` (empty for none) and have
  // exactly `count` tokens after it (npos for any number).
  const Line& expect(std::string_view keyword, std::size_t count, std::string_view shape) {
    if (at_end()) parse_error(last_line(), "unexpected end of input, expected '" + std::string(shape) + "'");
    const Line& l = lines_[pos_++];
    const std::size_t skip = keyword.empty() ? 0 : 1;
    if ((!keyword.empty() && l.tok[0] != keyword) ||
        (count != std::string::npos && l.tok.size() != count + skip))
      parse_error(l.no, "expected '" + std::string(shape) + "'");
    return l;
  }

  void finish() const {
    if (!at_end()) parse_error(lines_[pos_].no, "unexpected content '" + lines_[pos_].tok[0] + "'");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

Rational rational_at(const Line& l, std::size_t i) {
  try {
    return Rational::parse(l.tok[i]);
  } catch (const Error&) {
    parse_error(l.no, "bad rational '" + l.tok[i] + "'");
  }
}

BigInt integer_at(const Line& l, std::size_t i) {
  const Rational r = rational_at(l, i);
  if (!r.is_integer()) parse_error(l.no, "expected an integer, got '" + l.tok[i] + "'");
  return r.num();
}

std::size_t count_at(const Line& l, std::size_t i) {
  const BigInt v = integer_at(l, i);
  if (v < 0 || !v.fits_ulong_p()) parse_error(l.no, "expected a non-negative count");
  return v.get_ui();
}

void header(Reader& rd, std::string_view magic) {
  const Line& l = rd.expect(magic, 1, std::string(magic) + " 1");
  if (l.tok[1] != "1") parse_error(l.no, "unsupported version '" + l.tok[1] + "'");
}

std::string join_points(const Point2& p) { return p.x.str() + " " + p.y.str(); }

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

const std::string* Instance::meta_value(std::string_view key) const {
  for (const auto& [k, v] : meta)
    if (k == key) return &v;
  return nullptr;
}

Instance read_instance(std::string_view text) {
  Reader rd(text);
  header(rd, "cwi");
  const Line& dim = rd.expect("dim", 1, "dim 2");
  if (dim.tok[1] != "2") parse_error(dim.no, "only dim 2 is supported");
  const Line& rows_line = rd.expect("rows", 1, "rows <m>");
  const std::size_t m = count_at(rows_line, 1);
  std::vector<HRow> rows;
  for (std::size_t i = 0; i < m; ++i) {
    const Line& l = rd.expect("", 3, "a1 a2 b");
    const Vec2 a{rational_at(l, 0), rational_at(l, 1)};
    if (a.is_zero()) parse_error(l.no, "row with zero normal");
    rows.push_back(HRow::make(a, rational_at(l, 2)));
  }
  const Line& cl = rd.expect("cost", 2, "cost c1 c2");
  Vec2 cost{rational_at(cl, 1), rational_at(cl, 2)};
  if (cost.is_zero()) parse_error(cl.no, "cost vector is zero");
  const Line& sl = rd.expect("start", 2, "start x y");
  Point2 start{rational_at(sl, 1), rational_at(sl, 2)};
  std::optional<Point2> target;
  if (rd.peek("target")) {
    const Line& tl = rd.expect("target", 2, "target x y");
    target = Point2{rational_at(tl, 1), rational_at(tl, 2)};
  }
  std::vector<std::pair<std::string, std::string>> meta;
  while (rd.peek("meta")) {
    const Line& l = rd.expect("meta", std::string::npos, "meta key value");
    if (l.tok.size() < 2) parse_error(l.no, "meta line without a key");
    // Value is the rest of the line after the key, trimmed.
    std::size_t at = l.text.find(l.tok[1], l.text.find("meta") + 4) + l.tok[1].size();
    std::string value = l.text.substr(at);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    meta.emplace_back(l.tok[1], std::move(value));
  }
  rd.finish();

  std::optional<HPolygon> polygon;
  try {
    polygon.emplace(std::move(rows));
  } catch (const Error& e) {
    parse_error(rows_line.no, std::string("rows do not describe a valid polygon (") + e.what() + ")");
  }
  if (!contains(*polygon, start)) parse_error(sl.no, "start point lies outside the polygon");
  return {std::move(*polygon), std::move(cost), std::move(start), std::move(target), std::move(meta)};
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "cwi 1\ndim 2\nrows " << inst.polygon.size() << '\n';
  for (const auto& r : inst.polygon.rows()) out << r.a.x << ' ' << r.a.y << ' ' << r.b << '\n';
  out << "cost " << inst.cost.x << ' ' << inst.cost.y << '\n';
  out << "start " << join_points(inst.start) << '\n';
  if (inst.target) out << "target " << join_points(*inst.target) << '\n';
  for (const auto& [k, v] : inst.meta) {
    out << "meta " << k;
    if (!v.empty()) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Walk read_walk(std::string_view text) {
  Reader rd(text);
  header(rd, "cww");
  const std::size_t n = count_at(rd.expect("points", 1, "points <n>"), 1);
  if (n < 1) throw Error(ErrorKind::Parse, "a walk needs at least one point");
  Walk w;
  for (std::size_t i = 0; i < n; ++i) {
    const Line& l = rd.expect("", 2, "x y");
    w.points.push_back({rational_at(l, 0), rational_at(l, 1)});
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Line& l = rd.expect("step", 2, "step dx dy");
    w.steps.push_back({rational_at(l, 1), rational_at(l, 2)});
  }
  rd.finish();
  return w;
}

std::string write_walk(const Walk& w) {
  std::ostringstream out;
  out << "cww 1\npoints " << w.points.size() << '\n';
  for (const auto& p : w.points) out << join_points(p) << '\n';
  for (const auto& g : w.steps) out << "step " << g.x << ' ' << g.y << '\n';
  return out.str();
}

SubsetSumInstance read_essr(std::string_view text) {
  Reader rd(text);
  header(rd, "essr");
  const std::size_t n = count_at(rd.expect("n", 1, "n <count>"), 1);
  const Line& al = rd.expect("a", n, "a a_1 ... a_n");
  SubsetSumInstance inst;
  for (std::size_t i = 1; i <= n; ++i) inst.a.push_back(integer_at(al, i));
  inst.S = integer_at(rd.expect("target", 1, "target S"), 1);
  inst.k = count_at(rd.expect("k", 1, "k K"), 1);
  rd.finish();
  try {
    inst.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return inst;
}

std::string write_essr(const SubsetSumInstance& inst) {
  std::ostringstream out;
  out << "essr 1\nn " << inst.a.size() << "\na";
  for (const auto& x : inst.a) out << ' ' << x;
  out << "\ntarget " << inst.S << "\nk " << inst.k << '\n';
  return out.str();
}

ThreeDMInstance read_3dm(std::string_view text) {
  Reader rd(text);
  header(rd, "3dm");
  ThreeDMInstance inst;
  inst.n_elems = count_at(rd.expect("n", 1, "n <N>"), 1);
  const std::size_t m = count_at(rd.expect("triples", 1, "triples <m>"), 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Line& l = rd.expect("", 3, "i j h");
    inst.triples.push_back({count_at(l, 0), count_at(l, 1), count_at(l, 2)});
  }
  rd.finish();
  try {
    inst.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return inst;
}

std::string write_3dm(const ThreeDMInstance& inst) {
  std::ostringstream out;
  out << "3dm 1\nn " << inst.n_elems << "\ntriples " << inst.triples.size() << '\n';
  for (const auto& [i, j, h] : inst.triples) out << i << ' ' << j << ' ' << h << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance pell_instance(const PellArtifact& p) {
  return {p.h, {1, 0}, p.u, p.t, {{"construction", "pell"}, {"ell", std::to_string(p.ell)}}};
}

Instance reduction_instance(const ReductionInstance& red) {
  std::string a;
  for (const auto& x : red.source.a) a += (a.empty() ? "" : " ") + x.get_str();
  return {red.polygon,
          red.c,
          red.s,
          red.t,
          {{"construction", "reduction"},
           {"a", a},
           {"S", red.source.S.get_str()},
           {"k", std::to_string(red.k)},
           {"C", red.C.get_str()},
           {"Ck", std::to_string(red.Ck())},
           {"epsilon", red.epsilon.str()}}};
}

std::optional<std::string> exact_decimal(const Rational& r) {
  BigInt d = r.den();
  unsigned long twos = mpz_remove(d.get_mpz_t(), d.get_mpz_t(), BigInt(2).get_mpz_t());
  unsigned long fives = mpz_remove(d.get_mpz_t(), d.get_mpz_t(), BigInt(5).get_mpz_t());
  if (d != 1) return std::nullopt;
  const unsigned long digits = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = r.num() * scale / r.den();
  std::string out = scaled < 0 ? "-" : "";
  std::string s = BigInt(abs(scaled)).get_str();
  if (digits == 0) return out + s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  return out + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

std::string lp_linear_row(const std::vector<Rational>& coeffs, const std::vector<std::string>& names,
                          const std::optional<Rational>& rhs) {
  std::vector<Rational> vals = coeffs;
  if (rhs) vals.push_back(*rhs);
  const bool decimal =
      std::all_of(vals.begin(), vals.end(), [](const Rational& v) { return exact_decimal(v).has_value(); });
  if (!decimal) {
    BigInt l = 1;
    for (const auto& v : vals) l = lcm(l, v.den());
    for (auto& v : vals) v *= Rational(l);
  }
  auto text = [&](const Rational& v) { return decimal ? *exact_decimal(v) : v.str(); };

  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& v = vals[i];
    if (v.is_zero()) continue;
    const bool neg = v.sign() < 0;
    if (out.empty()) {
      if (neg) out += "- ";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = v.abs();
    if (mag != Rational(1)) out += text(mag) + " ";
    out += names[i];
  }
  if (out.empty()) out = "0 " + names.front();
  if (rhs) out += " <= " + text(vals.back());
  return out;
}

std::string export_lp(const Instance& inst) {
  const std::vector<std::string> names{"x", "y"};
  std::ostringstream out;
  out << "\\ cwalk instance: maximize c.x subject to A x <= b\n";
  out << "Maximize\n obj: " << lp_linear_row({inst.cost.x, inst.cost.y}, names, std::nullopt) << '\n';
  out << "Subject To\n";
  for (std::size_t i = 0; i < inst.polygon.size(); ++i) {
    const HRow& r = inst.polygon.rows()[i];
    out << " r" << i << ": " << lp_linear_row({r.a.x, r.a.y}, names, r.b) << '\n';
  }
  out << "Bounds\n x free\n y free\nEnd\n";
  return out.str();
}

std::string render_svg(const Instance& inst, const Walk* walk) {
  const auto& vs = inst.polygon.vertex_form().vertices();
  double minx = vs[0].x.to_double(), maxx = minx, miny = vs[0].y.to_double(), maxy = miny;
  for (const auto& v : vs) {
    minx = std::min(minx, v.x.to_double());
    maxx = std::max(maxx, v.x.to_double());
    miny = std::min(miny, v.y.to_double());
    maxy = std::max(maxy, v.y.to_double());
  }
  const double dx = maxx - minx, dy = maxy - miny;
  const double aspect = std::max(dx, dy) / std::min(dx, dy);
  const bool uniform = aspect <= 20.0;
  double sx, sy;
  if (uniform) {
    sx = sy = 800.0 / std::max(dx, dy);
  } else {
    sx = 800.0 / dx;
    sy = 800.0 / dy;
  }
  const double padx = 0.05 * dx * sx, pady = 0.05 * dy * sy;
  const double width = dx * sx + 2 * padx, height = dy * sy + 2 * pady;
  auto screen = [&](const Point2& p) {
    return std::pair{padx + (p.x.to_double() - minx) * sx, pady + (maxy - p.y.to_double()) * sy};
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  if (!uniform) out << "<!-- nonuniform display scaling: shapes are distorted for display only -->\n";
  out << "<g transform=\"matrix(" << fmt(sx) << " 0 0 " << fmt(-sy) << ' ' << fmt(padx - minx * sx) << ' '
      << fmt(pady + maxy * sy) << ")\">\n";
  out << "<path d=\"";
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i == 0 ? "M" : " L") << fmt(vs[i].x.to_double()) << ' ' << fmt(vs[i].y.to_double());
  out << " Z\" fill=\"#e8eef7\" stroke=\"#1f3b73\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
  if (walk != nullptr && !walk->points.empty()) {
    out << "<polyline points=\"";
    for (std::size_t i = 0; i < walk->points.size(); ++i)
      out << (i == 0 ? "" : " ") << fmt(walk->points[i].x.to_double()) << ',' << fmt(walk->points[i].y.to_double());
    out << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "</g>\n";
  const auto [stx, sty] = screen(inst.start);
  out << "<circle class=\"start\" cx=\"" << fmt(stx) << "\" cy=\"" << fmt(sty) << "\" r=\"5\" fill=\"#27ae60\"/>\n";
  if (inst.target) {
    const auto [tx, ty] = screen(*inst.target);
    out << "<circle class=\"target\" cx=\"" << fmt(tx) << "\" cy=\"" << fmt(ty) << "\" r=\"5\" fill=\"#c0392b\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cwalk
