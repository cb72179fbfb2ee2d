// Finite-dimensional left modules, intertwiners, and the abelian toolkit:
// kernels, cokernels, images, direct sums, duals, covers and hulls.
//
// A Module fixes one action matrix per algebra basis element; morphisms are
// matrices target.dim x source.dim acting on coordinate columns. Everything
// is immutable after construction and validated on construction.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "phantomlab/algebra.hpp"
#include "phantomlab/ffmatrix.hpp"
#include "phantomlab/rng.hpp"

namespace phantomlab {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

class Module {
 public:
  Module(AlgebraPtr alg, std::vector<FFMatrix> action, std::string name = "");

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  std::uint64_t id() const { return id_; }
  const FFMatrix& action(std::size_t basis_index) const { return action_[basis_index]; }

  // Action of an arbitrary algebra element given by coordinates.
  FFMatrix act(std::span<const Fel> algebra_elt) const;

  bool is_zero() const { return dim_ == 0; }

  // Checks act(b_i)*act(b_j) = act(b_i b_j) and act(1) = id.
  void validate() const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_;
  std::vector<FFMatrix> action_;
  std::string name_;
  std::uint64_t id_;
};

ModulePtr make_module(AlgebraPtr alg, std::vector<FFMatrix> action, std::string name = "");
ModulePtr zero_module(AlgebraPtr alg);
ModulePtr regular_module(AlgebraPtr alg);                  // A as a left module
ModulePtr projective_module(AlgebraPtr alg, std::size_t idem);   // A*e_i
ModulePtr simple_module(AlgebraPtr alg, std::size_t idem);       // top of A*e_i
ModulePtr dual_module(const ModulePtr& m, AlgebraPtr op);  // D(M) over the opposite algebra

struct Morphism {
  ModulePtr source, target;
  FFMatrix matrix;   // target.dim x source.dim

  void validate() const;   // intertwining against every algebra basis element
  bool is_zero() const { return matrix.is_zero(); }
  bool is_injective() const { return matrix.rank() == source->dim(); }
  bool is_surjective() const { return matrix.rank() == target->dim(); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

Morphism identity_morphism(const ModulePtr& m);
Morphism zero_morphism(const ModulePtr& src, const ModulePtr& tgt);
Morphism compose(const Morphism& second, const Morphism& first);   // second o first
Morphism add(const Morphism& a, const Morphism& b);
Morphism subtract(const Morphism& a, const Morphism& b);
Morphism scale(Fel c, const Morphism& a);
Morphism dual_morphism(const Morphism& f, AlgebraPtr op);  // D(f): D(target) -> D(source)

// Basis of Hom_A(M, N) as a list of morphisms (deterministic order).
std::vector<Morphism> hom_space(const ModulePtr& m, const ModulePtr& n);

// Hom_A(M, N) as a subspace of flattened matrices (row-major), ambient
// dim = N.dim * M.dim. Used wherever morphism-space linear algebra happens.
Subspace hom_subspace(const ModulePtr& m, const ModulePtr& n);

struct SubmoduleResult {
  ModulePtr module;
  Morphism inclusion;
};
struct QuotientResult {
  ModulePtr module;
  Morphism projection;
};
struct KernelResult {
  ModulePtr module;
  Morphism inclusion;
};
struct CokernelResult {
  ModulePtr module;
  Morphism projection;
};
struct ImageResult {
  ModulePtr module;
  Morphism inclusion;        // into target
  Morphism corestriction;    // source onto image
};

// Smallest submodule containing the given coordinate rows.
SubmoduleResult submodule_spanned(const ModulePtr& m, const FFMatrix& rows,
                                  const std::string& name = "");
QuotientResult quotient_module(const ModulePtr& m, const Subspace& sub,
                               const std::string& name = "");

KernelResult kernel(const Morphism& f);
CokernelResult cokernel(const Morphism& f);
ImageResult image(const Morphism& f);

struct DirectSum {
  ModulePtr module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);

struct Conflation {
  Morphism inflation;   // A -> B
  Morphism deflation;   // B -> C
  void validate() const;   // mono, epi, im = ker
};

Subspace radical_subspace_of(const ModulePtr& m);   // rad(A)*M inside M

// Minimal projective cover conflation  Omega(M) -> P -> M.
Conflation projective_cover(const ModulePtr& m);
// Injective hull conflation  M -> I -> Omega^{-1}(M), via the dual cover
// over the opposite algebra. Needs the opposite algebra handle.
Conflation injective_hull(const ModulePtr& m, AlgebraPtr op);

// Deterministic sample morphism: seeded combination of a hom-space basis.
Morphism seeded_morphism(const ModulePtr& m, const ModulePtr& n, Rng& rng);

enum class IsoVerdict { Isomorphic, Distinct, Undetermined };
struct IsoResult {
  IsoVerdict verdict;
  std::optional<Morphism> iso;
};
// Invariant screening plus bounded random search for an invertible intertwiner.
IsoResult iso_test(const ModulePtr& m, const ModulePtr& n, std::uint64_t seed = 11,
                   std::size_t tries = 64);

// Deterministic test family: simples, indecomposable projectives and
// injectives, their syzygies and cosyzygies, cyclic submodules and quotients
// of small projective sums, plus seeded extras; deduplicated up to found
// isomorphism and filtered to 0 < dim <= dim_bound.
std::vector<ModulePtr> module_zoo(AlgebraPtr alg, AlgebraPtr op, std::size_t dim_bound,
                                  std::uint64_t seed);

}  // namespace phantomlab
