#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwalk/constructions.hpp"
#include "cwalk/polygon.hpp"
#include "cwalk/walk.hpp"

namespace cwalk {

/// Contents of a "cwi 1" instance file: the tuple (P, s, c) plus an optional
/// target and free-form metadata that solvers ignore.
struct Instance {
  HPolygon polygon;
  Vec2 cost;
  Point2 start;
  std::optional<Point2> target;
  std::vector<std::pair<std::string, std::string>> meta;

  const std::string* meta_value(std::string_view key) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws Error(Parse) with a line number on malformed input, including rows
/// that do not form a valid polygon and a start point outside it.
Instance read_instance(std::string_view text);
std::string write_instance(const Instance& inst);

Walk read_walk(std::string_view text);
std::string write_walk(const Walk& w);

/// "essr 1" / "n N" / "a a_1 ... a_n" / "target S" / "k K".
SubsetSumInstance read_essr(std::string_view text);
std::string write_essr(const SubsetSumInstance& inst);

/// "3dm 1" / "n N" / "triples m" / m lines "i j h".
ThreeDMInstance read_3dm(std::string_view text);
std::string write_3dm(const ThreeDMInstance& inst);

/// Whole file as a string; throws Error(Parse) if it cannot be read.
std::string read_file(const std::string& path);

Instance pell_instance(const PellArtifact& p);
Instance reduction_instance(const ReductionInstance& red);

/// Exact decimal text if the denominator has no prime factors besides 2 and 5.
std::optional<std::string> exact_decimal(const Rational& r);

/// Static SVG picture of the polygon, start/target markers and the walk.
std::string render_svg(const Instance& inst, const Walk* walk = nullptr);

/// CPLEX LP text for "maximize c·x subject to the rows".
std::string export_lp(const Instance& inst);

/// One LP row "terms <= rhs": decimals when every value terminates,
/// otherwise all values multiplied by the lcm of their denominators.
std::string lp_linear_row(const std::vector<Rational>& coeffs, const std::vector<std::string>& names,
                          const std::optional<Rational>& rhs);

}  // namespace cwalk
