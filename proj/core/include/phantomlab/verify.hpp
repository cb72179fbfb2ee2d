// Named, seedable verification suites: the paper's theorems packaged as test
// batteries runnable from the shipped binary. Each check reports a stable
// name, a pass flag, and a short detail line with the counts it ran.

#pragma once

#include "phantomlab/instances.hpp"
#include "phantomlab/io.hpp"

namespace phantomlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  bool pass = true;
  std::vector<CheckResult> checks;

  void add(CheckResult c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
  }
};

// n = 0 ground truth over the dual numbers (needs a context with n = 0).
SuiteReport suite_stable0(Instance& inst, std::uint64_t seed);

// p-duality, phantom coherence, well-definedness, ring axioms, functor T.
SuiteReport suite_composition(Instance& inst, std::uint64_t seed);

// omega and Syz: well-definedness, Syz o T = omega, linear isomorphism,
// density, the phantom-square equivalence, and the n-bump comparison.
SuiteReport suite_syzygy(Instance& inst, std::uint64_t seed);

// Appendix battery on the projective line over GF(2) and GF(5).
SuiteReport suite_p1(std::uint64_t seed);

Json report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

// Rebuild the instance with n bumped by one (same algebra, fresh session).
Instance bump_instance(const Instance& inst);

}  // namespace phantomlab
