// Shipped instances: the dual numbers with the classical stable structure
// (n = 0) and the six-dimensional tensor algebra as the nontrivial
// playground (n = 1, and n = 2 for the bump comparison).

#pragma once

#include "phantomlab/stable.hpp"

namespace phantomlab {

struct Instance {
  AlgebraPtr algebra;
  std::shared_ptr<Session> session;
  std::shared_ptr<NFrob> frob;
  std::shared_ptr<StableCat> stable;
  std::map<std::string, ModulePtr> named;   // S1, P1, ... for reports and tests
};

// GF(2)[t]/(t^2), n = 0: registry = {A}, classical stable category.
Instance make_instance_lambda0(std::uint64_t seed = 1, bool paranoid = false);

// The 6-dimensional algebra, n as given (1 or 2): registry = {P1, P2, L1},
// complete by the classification of finite-pd indecomposables.
Instance make_instance_lambda1(std::size_t n = 1, std::uint64_t seed = 1, bool paranoid = false);

}  // namespace phantomlab
