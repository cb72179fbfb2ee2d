// Session: the per-algebra computation hub. Owns the opposite algebra, a
// duality involution on module handles, and lazily extended minimal
// projective resolutions.
//
// Canonicality matters: the resolution of a syzygy module created inside a
// resolution IS the shifted resolution of its root (same objects, same
// morphisms), and dual(dual(M)) returns the handle M itself. Downstream
// identities like Omega^n(Omega N) = Omega^{n+1} N then hold on the nose.

#pragma once

#include <map>
#include <memory>

#include "phantomlab/module.hpp"

namespace phantomlab {

class Session;

// Read handle onto a minimal projective resolution
//    ... -> P_1 -> P_0 -> M  with  omega^0 = M,
//    cover(k): P_k ->> omega^k,  incl(k): omega^(k+1) -> P_k,
//    differential(k) = incl(k-1) o cover(k) : P_k -> P_(k-1).
class ResView {
 public:
  ModulePtr base() const;
  ModulePtr term(std::size_t k) const;       // P_k
  ModulePtr syzygy(std::size_t k) const;     // omega^k (k = 0 gives base)
  Morphism cover(std::size_t k) const;       // P_k ->> omega^k
  Morphism incl(std::size_t k) const;        // omega^(k+1) -> P_k
  Morphism differential(std::size_t k) const;   // k >= 1
  Morphism augmentation() const { return cover(0); }

 private:
  friend class Session;
  struct Data;
  std::shared_ptr<Data> data_;
  std::size_t offset_ = 0;
};

class Session {
 public:
  explicit Session(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const AlgebraPtr& opposite() const { return op_; }

  // Duality over the opposite algebra; involutive on handles.
  ModulePtr dual(const ModulePtr& m);
  Morphism dual(const Morphism& f);

  // Minimal projective resolution of m (over whichever of the two algebras
  // m lives), extended so that term(k), syzygy(k+1) exist for k <= length.
  ResView proj_res(const ModulePtr& m, std::size_t length);

  ModulePtr syzygy(const ModulePtr& m, std::size_t k);

  // Projective dimension if it is < limit, otherwise nullopt.
  std::optional<std::size_t> projective_dimension(const ModulePtr& m, std::size_t limit);

  ModulePtr zero(AlgebraPtr which);

 private:
  AlgebraPtr alg_, op_;
  std::map<std::uint64_t, ResView> res_;            // module id -> resolution view
  std::map<std::uint64_t, ModulePtr> dual_;         // module id -> dual handle
  ModulePtr zero_alg_, zero_op_;

  void extend(ResView& view, std::size_t length);
};

}  // namespace phantomlab
