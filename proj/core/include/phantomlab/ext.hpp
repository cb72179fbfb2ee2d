// Yoneda Ext calculus on minimal projective resolutions.
//
// A degree-k class on Ext^k(M, N) is represented by a cocycle: a module map
// phi : P_k(M) -> N with phi . d_{k+1} = 0, stored as its matrix. Cosets are
// taken modulo coboundaries {psi . d_k}. The canonical class of the length-k
// unit conflation from the minimal resolution is the cover P_k ->> omega^k
// itself, which makes left unit factorizations exact by construction.
//
// Degree 0 is Hom: cocycles are phi : P_0 -> N with phi . d_1 = 0, i.e.
// morphisms M -> N composed with the augmentation; coboundaries vanish.

#pragma once

#include <memory>

#include "phantomlab/resolution.hpp"

namespace phantomlab {

class ExtSpace;
using ExtSpacePtr = std::shared_ptr<const ExtSpace>;

class ExtSpace {
 public:
  ModulePtr m, n;            // Ext^degree(m, n)
  std::size_t degree = 0;
  ModulePtr term;            // P_degree(m); cocycles are maps term -> n
  Subspace cocycles;         // flattened matrices, inside Hom(term, n)
  Subspace coboundaries;     // contained in cocycles
  Subspace quotient_reps;    // canonical complement images: reduce(z) mod B

  std::size_t dim() const { return cocycles.dim() - coboundaries.dim(); }

  // Canonical coordinates of a cocycle's coset; length = dim().
  std::vector<Fel> coset_of(const FFMatrix& cocycle) const;
  FFMatrix cocycle_from_coset(std::span<const Fel> coords) const;
  bool is_cocycle(const FFMatrix& candidate) const;
};

struct ExtClass {
  ExtSpacePtr space;
  FFMatrix cocycle;   // space->n.dim x space->term.dim

  std::vector<Fel> coset() const { return space->coset_of(cocycle); }
  bool is_zero_class() const { return is_zero_vector(coset()); }
};

// Chain of spliced conflations realizing a degree-k class: chain[0] deflates
// onto M, chain[k-1] starts at N; adjacent ends match.
using ExtensionChain = std::vector<Conflation>;

class ExtCalc {
 public:
  explicit ExtCalc(std::shared_ptr<Session> session) : s_(std::move(session)) {}

  Session& session() { return *s_; }
  const std::shared_ptr<Session>& session_ptr() const { return s_; }

  ExtSpacePtr ext_space(const ModulePtr& m, const ModulePtr& n, std::size_t degree);

  ExtClass zero_class(const ExtSpacePtr& sp);
  ExtClass make_class(const ExtSpacePtr& sp, FFMatrix cocycle);   // validates

  // Degree-0 bridges.
  ExtClass from_hom(const Morphism& f);                          // Ext^0 class
  Morphism to_hom(const ExtClass& degree0);

  // gamma . f : pullback along f : A -> gamma.m
  ExtClass pullback(const ExtClass& gamma, const Morphism& f);
  // g . gamma : pushout along g : gamma.n -> B
  ExtClass pushout(const Morphism& g, const ExtClass& gamma);
  ExtClass baer_sum(const ExtClass& a, const ExtClass& b);
  ExtClass negate(const ExtClass& a);
  ExtClass scale_class(Fel c, const ExtClass& a);

  // Yoneda product: gamma in Ext^i(N, K), delta in Ext^j(M, N) -> Ext^(i+j)(M, K).
  ExtClass splice(const ExtClass& gamma, const ExtClass& delta);

  // Chain map lifting f : M -> N through the minimal resolutions, degrees
  // 0..k; squares commute on the nose.
  std::vector<Morphism> comparison_lift(const Morphism& f, std::size_t k);
  // Induced map on k-th syzygies (restriction of the lift), k >= 1.
  Morphism syzygy_lift(const Morphism& f, std::size_t k);

  // Canonical class of the length-k unit conflation from the minimal
  // resolution: cocycle = cover(k), class in Ext^k(N, omega^k N).
  ExtClass canonical_unit(const ModulePtr& n, std::size_t k);

  // Left unit factorization: gamma = g . canonical_unit(M, n) with
  // g : omega^n M -> Y. Exact at cocycle level.
  Morphism luf(const ExtClass& gamma);

  // Yoneda class of a materialized k-fold extension chain ending at m.
  ExtClass class_of_extension(const ModulePtr& m, const ExtensionChain& chain);

  // Materialize a chain realizing the class (degree >= 1).
  ExtensionChain extension_form(const ExtClass& gamma);

  // Dual class over the opposite algebra: Ext^k(M, Y) -> Ext^k(DY, DM).
  ExtClass dual_class(const ExtClass& gamma);
  Conflation dual_conflation(const Conflation& c);

  // Injective coresolution data of y, as the dual of the minimal projective
  // resolution of D(y): chain y -> I^1 -> ... -> I^k -> end, plus its class
  // in Ext^k(end, y).
  struct UpUnit {
    ModulePtr start, end;
    ExtensionChain chain;
    ExtClass cls;
  };
  UpUnit canonical_up_unit(const ModulePtr& y, std::size_t k);

  // Cosyzygy via the dual minimal cover: D(omega^k_op D(y)).
  ModulePtr cosyzygy(const ModulePtr& y, std::size_t k);

  // Right unit factorization gamma = delta . f with delta the canonical up
  // unit of Y and f : M -> delta.end; verified by re-extraction.
  struct Ruf {
    UpUnit delta;
    Morphism f;
  };
  Ruf ruf(const ExtClass& gamma);

 private:
  std::shared_ptr<Session> s_;
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::size_t>, ExtSpacePtr> spaces_;
  std::map<std::pair<std::uint64_t, std::size_t>, UpUnit> up_units_;
};

// Lift phi : P -> B through a deflation pi : E ->> B (P projective).
Morphism lift_through_deflation(const Morphism& pi, const Morphism& phi);
// Factor phi : X -> E through an injection iota : A -> E (im phi inside im iota).
Morphism factor_through_injection(const Morphism& iota, const Morphism& phi);

std::vector<Fel> flatten_matrix(const FFMatrix& m);   // row-major
FFMatrix unflatten_matrix(Fel p, std::size_t rows, std::size_t cols, std::span<const Fel> v);

}  // namespace phantomlab
