// Command-line front end: instance generation, exact solving, verification
// and export.
//
// Exit codes: 0 success / walk found, 10 no walk within the depth bound,
// 11 node cap exceeded, 2 malformed input, 1 failed check or other error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cwalk/constructions.hpp"
#include "cwalk/errors.hpp"
#include "cwalk/io.hpp"
#include "cwalk/search.hpp"
#include "cwalk/verify.hpp"

using namespace cwalk;

namespace {

constexpr int kFound = 0;
constexpr int kFailure = 1;
constexpr int kBadInput = 2;
constexpr int kNotWithinDepth = 10;
constexpr int kNodeCap = 11;

struct Common {
  bool quiet = false;
  std::uint64_t seed = 1;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool with_output = true) {
  cmd->add_flag("--quiet", c.quiet, "Suppress diagnostics on stderr");
  cmd->add_option("--seed", c.seed, "Seed for sampled verification suites");
  if (with_output) cmd->add_option("-o,--output", c.output, "Write to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + c.output + "'");
  out << text;
}

void note(const Common& c, const std::string& text) {
  if (!c.quiet) std::cerr << text << '\n';
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidPolygon:
    case ErrorKind::UnboundedOrEmpty:
    case ErrorKind::DegenerateHull:
    case ErrorKind::BadParameter:
    case ErrorKind::BadInstance:
    case ErrorKind::BadCost:
    case ErrorKind::BadDimension:
    case ErrorKind::NotAVertex:
    case ErrorKind::AmbiguousOptimum:
      return kBadInput;
    default:
      return kFailure;
  }
}

SubsetSumInstance essr_from_args(const std::vector<std::string>& a, const std::string& S, std::size_t k) {
  SubsetSumInstance inst;
  try {
    for (const auto& x : a) inst.a.push_back(BigInt(x));
    inst.S = BigInt(S);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "subset-sum numbers must be integers");
  }
  inst.k = k;
  inst.validate();
  return inst;
}

// Promise check by enumeration where that is cheap; returns a message when
// it could not be run.
std::optional<std::string> check_promise(const SubsetSumInstance& inst) {
  const BigInt sa = inst.S / inst.a.front();
  const std::size_t r_bound = sa.fits_ulong_p() ? std::min<std::size_t>(sa.get_ui(), 64) : 64;
  try {
    const EssrResult r = brute_force_essr(inst, r_bound, 1'000'000);
    if (r.verdict == EssrVerdict::PromiseViolated) {
      std::string w;
      for (std::size_t x : r.r) w += (w.empty() ? "" : ",") + std::to_string(x);
      throw Error(ErrorKind::BadInstance, "PromiseViolated: r = (" + w + ") reaches S with sum(r) != k");
    }
    return std::nullopt;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
    return "promise not checked: enumeration too large";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact monotone circuit walks on rational polygons"};
  app.require_subcommand(1);

  Common common;

  std::size_t ell = 0;
  auto* gen_pell = app.add_subcommand("gen-pell", "Write the P_l instance");
  gen_pell->add_option("ell", ell, "l >= 1")->required();
  add_common(gen_pell, common);

  std::vector<std::string> red_a;
  std::string red_S;
  std::size_t red_k = 0;
  std::string red_C;
  unsigned long auto_c = 0;
  std::string from_essr;
  auto* gen_red = app.add_subcommand("gen-reduction", "Write the subset-sum reduction polygon");
  gen_red->add_option("--a", red_a, "Strictly increasing positive integers");
  gen_red->add_option("--S", red_S, "Target sum");
  gen_red->add_option("--k", red_k, "Promised number of summands");
  auto* c_opt = gen_red->add_option("--C", red_C, "Gap constant C");
  gen_red->add_option("--auto-C", auto_c, "Compute C from eps = 1/T")->excludes(c_opt);
  gen_red->add_option("--from-essr", from_essr, "Read a, S, k from an essr file");
  add_common(gen_red, common);

  std::string in_path;
  auto* gen_3dm = app.add_subcommand("gen-3dm", "Reduce a 3DM file to an essr file");
  gen_3dm->add_option("file", in_path, "3dm instance")->required();
  add_common(gen_3dm, common);

  std::size_t max_depth = 0;
  std::size_t node_cap = 10'000'000;
  bool serial = false;
  auto* solve = app.add_subcommand("solve", "Shortest monotone circuit walk");
  solve->add_option("instance", in_path, "cwi instance")->required();
  solve->add_option("--max-depth", max_depth, "Depth bound")->required();
  solve->add_option("--node-cap", node_cap, "Bound on explored states");
  solve->add_flag("--serial", serial, "Use the single-threaded reference search");
  add_common(solve, common);

  std::size_t K = 1;
  auto* approx = app.add_subcommand("approx", "Depth-K search with edge-walk fallback");
  approx->add_option("instance", in_path, "cwi instance")->required();
  approx->add_option("K", K, "Depth bound K >= 1")->required();
  add_common(approx, common);

  std::string suite;
  std::string cert_path;
  std::size_t v_ell = 3;
  int v_d = 3;
  std::size_t v_count = 20;
  auto* verify = app.add_subcommand("verify", "Run verification suites or check a certificate");
  verify->add_option("instance", in_path, "cwi instance");
  verify->add_option("--cert", cert_path, "cww certificate to validate");
  verify->add_option("--suite", suite, "pell | reduction | lift | 3dm | random | all")
      ->check(CLI::IsMember({"pell", "reduction", "lift", "3dm", "random", "all"}));
  verify->add_option("--ell", v_ell, "l for the pell and lift suites");
  verify->add_option("--d", v_d, "Dimension for the lift suite");
  verify->add_option("--a", red_a, "Reduction suite numbers");
  verify->add_option("--S", red_S, "Reduction suite target");
  verify->add_option("--k", red_k, "Reduction suite k");
  verify->add_option("--C", red_C, "Reduction suite C");
  verify->add_option("--count", v_count, "Samples for the random suite");
  add_common(verify, common, false);

  auto* svg = app.add_subcommand("render-svg", "Draw an instance and optional walk");
  svg->add_option("instance", in_path, "cwi instance")->required();
  svg->add_option("--cert", cert_path, "cww certificate to draw");
  add_common(svg, common);

  auto* lp = app.add_subcommand("export-lp", "Write the instance as a CPLEX LP file");
  lp->add_option("instance", in_path, "cwi instance")->required();
  add_common(lp, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (gen_pell->parsed()) {
      emit(common, write_instance(pell_instance(build_p_ell(ell))));
      return 0;
    }

    if (gen_red->parsed()) {
      SubsetSumInstance inst;
      if (!from_essr.empty()) {
        inst = read_essr(read_file(from_essr));
      } else {
        if (red_a.empty() || red_S.empty() || red_k == 0)
          throw Error(ErrorKind::BadParameter, "need --a, --S and --k, or --from-essr");
        inst = essr_from_args(red_a, red_S, red_k);
      }
      BigInt C;
      if (auto_c != 0) {
        C = compute_gap_C(auto_c, static_cast<unsigned long>(inst.n()), static_cast<unsigned long>(inst.k));
      } else if (!red_C.empty()) {
        C = BigInt(red_C);
      } else {
        throw Error(ErrorKind::BadParameter, "need --C or --auto-C");
      }
      if (auto skipped = check_promise(inst)) note(common, "warning: " + *skipped);
      const ReductionInstance red = build_reduction(inst, C);
      for (const auto& w : red.warnings) note(common, "warning: " + w);
      emit(common, write_instance(reduction_instance(red)));
      return 0;
    }

    if (gen_3dm->parsed()) {
      emit(common, write_essr(reduce_3dm_to_essr(read_3dm(read_file(in_path)))));
      return 0;
    }

    if (solve->parsed()) {
      const Instance inst = read_instance(read_file(in_path));
      const SearchConfig cfg{max_depth, node_cap};
      const DistanceResult r = serial ? shortest_monotone_walk_serial(inst.polygon, inst.start, inst.cost, cfg)
                                      : shortest_monotone_walk(inst.polygon, inst.start, inst.cost, cfg);
      switch (r.outcome) {
        case SearchOutcome::Found:
          note(common, "found walk of length " + std::to_string(r.walk->length()) + " (" +
                           std::to_string(r.explored) + " states)");
          emit(common, write_walk(*r.walk));
          return kFound;
        case SearchOutcome::NotFoundWithinDepth:
          note(common, "no monotone walk of length <= " + std::to_string(max_depth) + " (" +
                           std::to_string(r.explored) + " states)");
          return kNotWithinDepth;
        case SearchOutcome::NodeCapExceeded:
          note(common, "node cap of " + std::to_string(node_cap) + " states exceeded");
          return kNodeCap;
      }
    }

    if (approx->parsed()) {
      const Instance inst = read_instance(read_file(in_path));
      const Walk w = approx_monotone_walk(inst.polygon, inst.start, inst.cost, K);
      note(common, "walk of length " + std::to_string(w.length()));
      emit(common, write_walk(w));
      return 0;
    }

    if (verify->parsed()) {
      Report rep;
      if (!in_path.empty()) {
        const Instance inst = read_instance(read_file(in_path));
        if (!cert_path.empty()) {
          rep.merge(verify_walk(inst, read_walk(read_file(cert_path))));
        } else {
          rep.merge(verify_instance(inst));
        }
      }
      const bool all = suite == "all";
      if (suite == "pell" || all) {
        if (all) {
          for (std::size_t l = 1; l <= 4; ++l) rep.merge(verify_pell(l));
        } else {
          rep.merge(verify_pell(v_ell));
        }
      }
      if (suite == "reduction" || all) {
        if (red_a.empty() || all) {
          rep.merge(verify_reduction(essr_from_args({"2", "3"}, "5", 2), 2));
          rep.merge(verify_reduction(essr_from_args({"2", "4"}, "5", 2), 2));
        } else {
          rep.merge(verify_reduction(essr_from_args(red_a, red_S, red_k), BigInt(red_C.empty() ? "2" : red_C)));
        }
      }
      if (suite == "lift" || all) {
        if (all) {
          for (std::size_t l : {2, 3})
            for (int d : {3, 4}) rep.merge(verify_lift(l, d));
        } else {
          rep.merge(verify_lift(v_ell, v_d));
        }
      }
      if (suite == "3dm" || all) rep.merge(verify_3dm());
      if (suite == "random" || all) rep.merge(verify_random(common.seed, v_count));
      if (rep.checks().empty()) throw Error(ErrorKind::BadParameter, "nothing to verify: give an instance or --suite");
      if (!common.quiet) std::cout << rep.str();
      return rep.ok() ? 0 : kFailure;
    }

    if (svg->parsed()) {
      const Instance inst = read_instance(read_file(in_path));
      std::optional<Walk> w;
      if (!cert_path.empty()) w = read_walk(read_file(cert_path));
      emit(common, render_svg(inst, w ? &*w : nullptr));
      return 0;
    }

    if (lp->parsed()) {
      emit(common, export_lp(read_instance(read_file(in_path))));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument&) {
    std::cerr << "error: malformed number\n";
    return kBadInput;
  }
  return kFailure;
}
