// The phantom stable category (C_p, T): anchored hom-sets as concrete
// quotient spaces, the tilde-equivalence, composition, addition, the functor
// T, the syzygy functor omega : C -> C_p, and the induced endofunctor Syz.
//
// Hom_{C_p}(M, N) is realized once and for all at the canonical anchor: the
// length-n unit conflation from the minimal projective resolution of N. A
// stable morphism is a coordinate vector in Ext^n(M, omega^n N) / p. Free
// pairs (class, non-canonical unit) exist at API boundaries only and are
// normalized through an angled pair immediately.
//
// At n = 0 the same code paths reproduce the classical stable category:
// Ext^0 = Hom, the anchor is the identity unit, and p is the subgroup of
// maps factoring through projectives.

#pragma once

#include "phantomlab/nfrob.hpp"

namespace phantomlab {

class StableHom;
using StableHomPtr = std::shared_ptr<const StableHom>;

class StableHom {
 public:
  ModulePtr m, n;
  UnitClass anchor;       // canonical delta_N in U_n(N)
  ExtSpacePtr ext;        // Ext^n(M, omega^n N)
  PSubspace psub;         // p(M, omega^n N) on coset coordinates
  Subspace reps;          // complement representatives: stable coordinates

  std::size_t dim() const { return ext->dim() - psub.sub.dim(); }
  // stable coordinates of a class in the anchored Ext space
  std::vector<Fel> project(const ExtClass& gamma) const;
  ExtClass representative(std::span<const Fel> coords) const;
};

struct StableMorphism {
  StableHomPtr space;
  std::vector<Fel> coords;

  bool is_zero_stable() const { return is_zero_vector(coords); }
};

// A free pair (class, unit conflation) before normalization.
struct FreePair {
  ExtClass cls;      // in Ext^n(M, delta.start)
  UnitClass delta;   // any element of U_n(N)
};

class StableCat {
 public:
  explicit StableCat(std::shared_ptr<NFrob> frob);

  NFrob& frob() { return *frob_; }
  ExtCalc& ext() { return frob_->ext(); }
  const FrobeniusContext& ctx() const { return frob_->ctx(); }

  StableHomPtr stable_hom(const ModulePtr& m, const ModulePtr& n);

  StableMorphism zero(const ModulePtr& m, const ModulePtr& n);
  StableMorphism identity(const ModulePtr& m);
  StableMorphism from_coords(const StableHomPtr& space, std::vector<Fel> coords);

  // Normalize a free pair into the canonical hom-set of (M, delta.end):
  // solve a.x = b.gamma mod p across an angled pair (a, b) of the canonical
  // anchor against delta.
  StableMorphism normalize(const FreePair& pair);

  // The defining relation: a.gamma - b.gamma' in p for an angled pair.
  // In paranoid mode the test reruns with the legs swapped.
  bool equivalent(const FreePair& x, const FreePair& y);

  // beta_bar o gamma_bar via ruf + co-angled pair + solve mod p + pullback.
  StableMorphism compose_stable(const StableMorphism& beta, const StableMorphism& gamma);

  StableMorphism add_stable(const StableMorphism& x, const StableMorphism& y);
  StableMorphism negate_stable(const StableMorphism& x);

  // Free-pair addition through an angled pair (the definitional route);
  // agrees with coordinate addition after normalization.
  StableMorphism add_free(const FreePair& x, const FreePair& y);

  // T(f) = (delta_N . f, delta_N)
  StableMorphism functor_T(const Morphism& f);

  struct StableInverse {
    bool invertible;
    StableMorphism inverse;
  };
  StableInverse stable_inverse(const StableMorphism& x);
  bool is_iso_stable(const StableMorphism& x);

  // omega(f) : the syzygy functor C -> C_p on a morphism. In paranoid mode
  // the value is recomputed across an independently padded unit conflation
  // and an angled pair, which must agree.
  StableMorphism omega_morphism(const Morphism& f);

  ModulePtr syz_object(const ModulePtr& m);        // omega M (minimal)
  ModulePtr cosyz_object(const ModulePtr& m);      // omega^{-1} M (gorenstein-gated)

  // Syz on a stable morphism, via a right unit factorization, a syzygy lift,
  // and the comparison isomorphism that re-anchors the cosyzygy end.
  StableMorphism syz_morphism(const StableMorphism& x);

  // Density comparison: the canonical stable isomorphism M -> omega(omega^{-1} M).
  StableMorphism density_comparison(const ModulePtr& m);

  // matrix of syz_morphism on a stable hom-space (columns = basis images)
  FFMatrix syz_matrix(const ModulePtr& m, const ModulePtr& n);

 private:
  std::shared_ptr<NFrob> frob_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, StableHomPtr> homs_;
  // composition is deterministic per (spaces, coordinates); the memo makes
  // exhaustive axiom sweeps affordable
  std::map<std::tuple<const StableHom*, const StableHom*, std::vector<Fel>, std::vector<Fel>>,
           StableMorphism>
      compose_memo_;

  StableMorphism project_into(const ModulePtr& m, const ModulePtr& n, const ExtClass& cls);
  UnitClass padded_down_unit(const ModulePtr& n_obj);   // non-minimal variant for paranoia
};

}  // namespace phantomlab
