#include "cwalk/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cwalk/circuits.hpp"
#include "cwalk/errors.hpp"
#include "cwalk/sampling.hpp"
#include "cwalk/search.hpp"

namespace cwalk {

void Report::add(std::string claim, bool ok, std::string detail) {
  checks_.push_back({std::move(claim), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void Report::skip(std::string claim, std::string why) {
  checks_.push_back({std::move(claim), CheckStatus::Skip, std::move(why)});
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::string Report::str() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP") << "  "
        << c.claim;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  return out.str();
}

namespace {

std::string len(const DistanceResult& r) {
  return r.found() ? "length " + std::to_string(r.walk->length()) : std::string(to_string(r.outcome));
}

std::set<Direction2> edge_directions(const VPolygon& v) {
  std::set<Direction2> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.insert(Direction2::of(v.next(i) - v[i]));
  return out;
}

}  // namespace

Report verify_pell(std::size_t ell, std::size_t node_cap) {
  Report rep;
  const std::string tag = "P_" + std::to_string(ell) + ": ";
  const PellArtifact p = build_p_ell(ell);
  const VPolygon& v = p.h.vertex_form();

  rep.add(tag + "edge count is 2l+1", p.h.size() == 2 * ell + 1, std::to_string(p.h.size()) + " rows");
  const std::size_t iu = v.index_of(p.u), iw = v.index_of(p.w);
  const bool adjacent = iu < v.size() && iw < v.size() && (v.next(iu) == p.w || v.prev(iu) == p.w);
  rep.add(tag + "u = (0,1) and w = (0,-1) are adjacent vertices", adjacent);

  const BigInt bound = BigInt(8 * static_cast<unsigned long>(ell) + 1);
  BigInt cap = 1;
  for (std::size_t i = 0; i < ell; ++i) cap *= bound;
  BigInt biggest = 0;
  for (const auto& row : p.A)
    for (const auto& x : row) biggest = std::max(biggest, BigInt(abs(x)));
  for (const auto& x : p.b) biggest = std::max(biggest, BigInt(abs(x)));
  rep.add(tag + "all entries bounded by (8l+1)^l", biggest <= cap,
          "max " + biggest.get_str() + " <= " + cap.get_str());

  bool strip = true;
  for (const auto& q : v.vertices()) {
    if (q == p.u || q == p.w) continue;
    strip = strip && q.x.sign() >= 0 && q.y.abs() < Rational(1);
  }
  rep.add(tag + "P minus {u, w} lies in R>=0 x (-1, 1)", strip);

  const Optimum opt = optimal_value(p.h, {1, 0});
  rep.add(tag + "t is the unique (1,0)-maximal vertex", opt.maximizers.size() == 1 && opt.maximizers[0] == p.t);

  if (ell <= 6) {
    for (const auto& [name, start] : {std::pair{"u", p.u}, std::pair{"w", p.w}}) {
      const DistanceResult r = shortest_monotone_walk(p.h, start, {1, 0}, {ell, node_cap});
      const bool valid = r.found() && is_valid_monotone_walk(p.h, {1, 0}, *r.walk).ok;
      rep.add(tag + "distance from " + name + " is l", r.found() && r.walk->length() == ell && valid, len(r));
      const DistanceResult shorter = shortest_monotone_walk(p.h, start, {1, 0}, {ell - 1, node_cap});
      rep.add(tag + "no walk from " + std::string(name) + " of length l-1",
              shorter.outcome == SearchOutcome::NotFoundWithinDepth, len(shorter));
    }
  } else {
    rep.skip(tag + "distance from u and w is l", "exhaustive search limited to l <= 6");
  }
  return rep;
}

Report verify_reduction(const SubsetSumInstance& inst, const BigInt& C, std::size_t node_cap) {
  Report rep;
  std::optional<ReductionInstance> built;
  try {
    built.emplace(build_reduction(inst, C));
  } catch (const Error& e) {
    rep.add("reduction polygon can be constructed", false, e.what());
    return rep;
  }
  const ReductionInstance& red = *built;
  const std::size_t Ck = red.Ck(), n = red.n;
  const Rational S(inst.S);

  std::set<Point2> expected{red.s, {1, S + red.epsilon}};
  expected.insert(red.chain.v.begin(), red.chain.v.end());
  expected.insert(red.corner_vertices.begin(), red.corner_vertices.end());
  const std::set<Point2> actual(red.vertices().vertices().begin(), red.vertices().vertices().end());
  rep.add("vertices are {(0,0), (1,S+eps)} + slope chain + corner image", expected == actual,
          std::to_string(actual.size()) + " vertices");
  rep.add("edge count is 4 + 2Ck + n", red.polygon.size() == 4 + 2 * Ck + n,
          std::to_string(red.polygon.size()) + " edges");
  if (n >= 4) {
    rep.add("edge count at most 2Ck + 2n", red.polygon.size() <= 2 * Ck + 2 * n);
  } else {
    rep.skip("edge count at most 2Ck + 2n", "bound needs n >= 4");
  }

  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& g : enumerate_circuits(red.polygon)) ++counts[static_cast<int>(classify_circuit(red, g))];
  rep.add("every circuit has type 1, 2 or 3 (type 3 slopes below 1/(2Ck))", counts[0] == 0,
          std::to_string(counts[1]) + "/" + std::to_string(counts[2]) + "/" + std::to_string(counts[3]));
  rep.add("epsilon lies in (0, box/2)", red.epsilon.sign() > 0 && red.epsilon < red.corner.box / 2);
  const Optimum opt = optimal_value(red.polygon, red.c);
  rep.add("t is the unique c-maximal vertex and t_y = S",
          opt.maximizers.size() == 1 && opt.maximizers[0] == red.t && red.t.y == S);

  bool slopes = true, below = true;
  for (std::size_t i = 1; i < red.chain.v.size(); ++i) {
    const Vec2 d = red.chain.v[i] - red.chain.v[i - 1];
    slopes = slopes && d.y == Rational(inst.a[i - 1]) * d.x;
  }
  for (const auto& q : red.chain.v) below = below && dot(red.c, q).sign() <= 0;
  rep.add("slope chain edge i has slope a_i", slopes);
  rep.add("c.v <= 0 on the slope chain", below);

  const BigInt sa = inst.S / inst.a.front();
  const std::size_t r_bound = sa.fits_ulong_p() ? std::min<std::size_t>(sa.get_ui(), 64) : 64;
  std::optional<EssrResult> essr;
  try {
    essr = brute_force_essr(inst, r_bound, 1'000'000);
  } catch (const Error&) {
    rep.skip("subset-sum promise holds", "enumeration too large");
  }
  if (!essr) return rep;
  rep.add("subset-sum promise holds", essr->verdict != EssrVerdict::PromiseViolated);

  if (essr->verdict == EssrVerdict::Feasible) {
    const Walk w = witness_walk(red, essr->r);
    const WalkCheck chk = is_valid_monotone_walk(red.polygon, red.c, w);
    rep.add("witness walk (0,0) -> (1,b1) -> (0,b1) -> ... -> t is valid with length 2k",
            chk.ok && w.length() == 2 * red.k, chk.ok ? "length " + std::to_string(w.length()) : chk.reason);
    if (2 * red.k <= 8) {
      const DistanceResult r = shortest_monotone_walk(red.polygon, red.s, red.c, {2 * red.k, node_cap});
      rep.add("feasible instance: distance at most 2k", r.found(), len(r));
    } else {
      rep.skip("feasible instance: distance at most 2k", "2k > 8");
    }
  } else if (essr->verdict == EssrVerdict::Infeasible) {
    if (Ck <= 6) {
      const DistanceResult r = shortest_monotone_walk(red.polygon, red.s, red.c, {Ck, node_cap});
      rep.add("infeasible instance: no walk of length <= Ck", r.outcome == SearchOutcome::NotFoundWithinDepth,
              len(r));
    } else {
      rep.skip("infeasible instance: no walk of length <= Ck", "Ck > 6");
    }
  }
  return rep;
}

Report verify_lift(std::size_t ell, int d) {
  Report rep;
  const PellArtifact p = build_p_ell(ell);
  const std::string tag = "P_" + std::to_string(ell) + " in dimension " + std::to_string(d) + ": ";
  const DistanceResult base = shortest_monotone_walk(p.h, p.u, {1, 0}, {ell, 10'000'000});

  const LiftedInstance li = lift_instance(p.h, p.u, {1, 0}, d);
  const LiftedDistanceResult lr = shortest_monotone_walk(li.polytope, li.s, li.c, {ell + 1, 10'000'000});
  const bool lvalid = lr.found() && is_valid_monotone_walk(li.polytope, li.c, *lr.walk).ok;
  rep.add(tag + "product lift keeps the distance",
          base.found() && lr.found() && lvalid && lr.walk->length() == base.walk->length(),
          lr.found() ? "length " + std::to_string(lr.walk->length()) : std::string(to_string(lr.outcome)));

  const std::size_t m = p.h.size();
  const std::size_t dd = static_cast<std::size_t>(d);
  const WedgeInstance wi = wedge_lift(p.h, p.u, {1, 0}, d);
  const DistanceResultN wr = shortest_monotone_walk(wi.polytope, wi.s, wi.c, {ell + 1, 10'000'000});
  const bool wvalid = wr.found() && is_valid_monotone_walk(wi.polytope, wi.c, *wr.walk).ok;
  rep.add(tag + "wedge lift keeps the distance",
          base.found() && wr.found() && wvalid && wr.walk->length() == base.walk->length(),
          wr.found() ? "length " + std::to_string(wr.walk->length()) : std::string(to_string(wr.outcome)));
  rep.add(tag + "wedge lift has m + d - 2 facets", wi.polytope.size() == m + dd - 2 && all_rows_facets(wi.polytope),
          std::to_string(wi.polytope.size()) + " facets; product lift has " +
              std::to_string(li.polytope.facet_count()));
  return rep;
}

Report verify_3dm(std::size_t max_triples) {
  Report rep;
  const std::size_t N = 2;
  std::vector<std::array<std::size_t, 3>> universe;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t h = 0; h < N; ++h) universe.push_back({i, j, h});

  std::size_t checked = 0, mismatches = 0, violations = 0, trivial = 0;
  for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
    ThreeDMInstance inst{N, {}};
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (mask & (1u << b)) inst.triples.push_back(universe[b]);
    if (inst.triples.size() > max_triples) continue;
    ++checked;
    const bool matching = has_perfect_matching(inst);
    try {
      const SubsetSumInstance essr = reduce_3dm_to_essr(inst);
      const EssrResult r = brute_force_essr(essr, N + 1);
      if (r.verdict == EssrVerdict::PromiseViolated) ++violations;
      if ((r.verdict == EssrVerdict::Feasible) != matching) ++mismatches;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TriviallyInfeasible) throw;
      ++trivial;
      if (matching) ++mismatches;
    }
  }
  const std::string sizes = std::to_string(checked) + " triple sets, " + std::to_string(trivial) + " trivially infeasible";
  rep.add("3DM: perfect matching exists iff the subset-sum image is feasible", mismatches == 0, sizes);
  rep.add("3DM: subset-sum promise never violated", violations == 0);
  return rep;
}

Report verify_random(std::uint64_t seed, std::size_t count) {
  Report rep;
  Rng rng(seed);
  std::size_t circuit_bad = 0, walk_bad = 0, invariance_bad = 0;
  for (std::size_t it = 0; it < count; ++it) {
    const VPolygon v = random_polygon(rng);
    const HPolygon h = v_to_h(v);
    const CircuitSet cs = enumerate_circuits(h);
    if (std::set<Direction2>(cs.begin(), cs.end()) != edge_directions(v)) ++circuit_bad;

    const Vec2 c = random_cost(rng);
    const Point2& s = v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    const DistanceResult r = shortest_monotone_walk(h, s, c, {v.size(), 1'000'000});
    if (!r.found() || !is_valid_monotone_walk(h, c, *r.walk).ok) {
      ++walk_bad;
      continue;
    }
    const AffineMap2 m = random_affine(rng);
    const HPolygon mh = transform(m, h);
    const Vec2 mc = pullback_cost(m, c);
    const DistanceResult mr = shortest_monotone_walk(mh, m(s), mc, {v.size(), 1'000'000});
    const Walk mw = transform_walk(m, *r.walk);
    if (!mr.found() || mr.walk->length() != r.walk->length() || !is_valid_monotone_walk(mh, mc, mw).ok)
      ++invariance_bad;
  }
  const std::string n = std::to_string(count) + " samples, seed " + std::to_string(seed);
  rep.add("random polygons: circuits are exactly the edge directions", circuit_bad == 0, n);
  rep.add("random polygons: found walks validate", walk_bad == 0, n);
  rep.add("random maps: distance and walk validity are affine invariant", invariance_bad == 0, n);
  return rep;
}

Report verify_walk(const Instance& inst, const Walk& w) {
  Report rep;
  const WalkCheck chk = is_valid_monotone_walk(inst.polygon, inst.cost, w);
  rep.add("certificate is a valid monotone circuit walk", chk.ok, chk.ok ? "" : chk.reason);
  rep.add("certificate starts at the instance start", !w.points.empty() && w.points.front() == inst.start);
  if (chk.ok && !w.points.empty()) {
    const Optimum opt = optimal_value(inst.polygon, inst.cost);
    rep.add("certificate ends at a c-maximal point", dot(inst.cost, w.points.back()) == opt.value);
  }
  return rep;
}

Report verify_instance(const Instance& inst) {
  Report rep;
  rep.add("start lies in the polygon", contains(inst.polygon, inst.start));
  if (inst.target) {
    const Optimum opt = optimal_value(inst.polygon, inst.cost);
    rep.add("target is c-maximal", contains(inst.polygon, *inst.target) && dot(inst.cost, *inst.target) == opt.value);
  }
  const std::string* kind = inst.meta_value("construction");
  if (kind == nullptr) return rep;
  try {
    if (*kind == "pell") {
      const std::string* ell_text = inst.meta_value("ell");
      if (ell_text == nullptr) throw Error(ErrorKind::Parse, "meta ell missing");
      const std::size_t ell = std::stoul(*ell_text);
      rep.add("polygon equals the regenerated P_l", build_p_ell(ell).h == inst.polygon);
      rep.merge(verify_pell(ell));
    } else if (*kind == "reduction") {
      const std::string* a = inst.meta_value("a");
      const std::string* S = inst.meta_value("S");
      const std::string* k = inst.meta_value("k");
      const std::string* C = inst.meta_value("C");
      if (!a || !S || !k || !C) throw Error(ErrorKind::Parse, "reduction metadata incomplete");
      SubsetSumInstance ss;
      std::istringstream in(*a);
      for (std::string tok; in >> tok;) ss.a.push_back(BigInt(tok));
      ss.S = BigInt(*S);
      ss.k = std::stoul(*k);
      const BigInt Cv(*C);
      rep.add("polygon equals the regenerated reduction", build_reduction(ss, Cv).polygon == inst.polygon);
      rep.merge(verify_reduction(ss, Cv));
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "malformed construction metadata");
  }
  return rep;
}

}  // namespace cwalk
