// JSON interchange: algebras, modules, morphisms, contexts, bundles.
// Loaders validate every invariant and fail with a message naming the file
// and the JSON path of the offending entry.

#pragma once

#include <string>

#include "phantomlab/instances.hpp"
#include "phantomlab/nfrob.hpp"
#include "phantomlab/p1.hpp"

#include "json.hpp"

namespace phantomlab {

using Json = nlohmann::ordered_json;

// Files referencing the same algebra path must share the handle, otherwise
// morphisms across them would not typecheck.
struct IoCache {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, ModulePtr> modules;
};

AlgebraPtr load_algebra(const std::string& path, IoCache& cache);
ModulePtr load_module(const std::string& path, IoCache& cache);
Morphism load_morphism(const std::string& path, IoCache& cache);
CoherentRep load_bundle(const std::string& path);

struct ContextOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<bool> paranoid;
};
// Builds the full instance: algebra, session, NFrob, StableCat, test family.
Instance load_context(const std::string& path, IoCache& cache, const ContextOverrides& over = {});

Json algebra_to_json(const Algebra& a);
Json module_to_json(const Module& m, const std::string& algebra_path);
Json morphism_to_json(const Morphism& f, const std::string& source_path,
                      const std::string& target_path);
Json bundle_to_json(const CoherentRep& rep);
Json matrix_to_json(const FFMatrix& m);
Json laurent_matrix_to_json(const LaurentMatrix& m);

void write_json(const std::string& path, const Json& j);

}  // namespace phantomlab
