#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwalk/constructions.hpp"
#include "cwalk/io.hpp"

namespace cwalk {

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
  std::string claim;
  CheckStatus status;
  std::string detail;
};

class Report {
 public:
  void add(std::string claim, bool ok, std::string detail = {});
  void skip(std::string claim, std::string why);
  void merge(const Report& other);

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  /// One line per check: "PASS  claim  [detail]".
  std::string str() const;

 private:
  std::vector<Check> checks_;
};

Report verify_pell(std::size_t ell, std::size_t node_cap = 10'000'000);
Report verify_reduction(const SubsetSumInstance& inst, const BigInt& C, std::size_t node_cap = 10'000'000);
Report verify_lift(std::size_t ell, int d);
/// All triple sets of size <= max_triples over the N = 2 universe.
Report verify_3dm(std::size_t max_triples = 5);
/// Random polygons and maps: circuit/edge equality, walk validity, affine
/// invariance of the distance.
Report verify_random(std::uint64_t seed, std::size_t count = 20);

Report verify_walk(const Instance& inst, const Walk& w);
/// Generic checks, plus the construction suite named in the metadata.
Report verify_instance(const Instance& inst);

}  // namespace cwalk
