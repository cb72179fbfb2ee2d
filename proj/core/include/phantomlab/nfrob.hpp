// The n-Frobenius layer: recognizing n-projectives and n-injectives, unit
// conflations, the p-subgroup of Ext^n, phantom/invertible verdicts, angled
// and co-angled pairs, and the solve-modulo-p helpers.
//
// Verdicts are three-valued. A Yes always comes with a certificate, a No
// with a witness; Unknown is an honest answer when the test family and
// registry cannot decide.

#pragma once

#include <optional>

#include "phantomlab/ext.hpp"

namespace phantomlab {

enum class Answer { Yes, No, Unknown };
const char* to_string(Answer a);

struct FrobeniusContext {
  AlgebraPtr algebra;
  std::size_t n = 0;
  std::vector<ModulePtr> registry;        // indecomposable n-projectives
  bool registry_complete = false;
  std::vector<ModulePtr> test_family;     // universally-quantified sweeps run over this
  bool gorenstein_mode = false;           // injdim(A) <= n on both sides, verified
  std::size_t zoo_dim_bound = 4;
  std::uint64_t seed = 1;
  bool paranoid = false;
  std::size_t sweep_depth = 1;            // extra Ext degrees in refutation sweeps
};

// A length-k exact chain with n-projective middles, anchored as the class of
// its splice. start = the syzygy end, end = the resolved object; the class
// lives in Ext^k(end, start). The chain itself is optional: derived units
// (angled-pair outputs) carry only their class.
struct UnitClass {
  ModulePtr start, end;
  std::size_t length = 0;
  ExtClass cls;
  ExtensionChain chain;   // may be empty
};

// Membership certificate for the registry-generated p-subgroup.
struct PMembership {
  bool member = false;
  bool authoritative = false;            // registry_complete
  std::vector<Fel> coefficients;         // over the generator list, when member
};

struct PSubspace {
  ExtSpacePtr space;      // Ext^n(X, Y)
  Subspace sub;           // subspace of the coset-coordinate space
  bool complete = false;
  struct Gen {
    std::size_t registry_index, hom_index, ext_index;
  };
  std::vector<Gen> gens;
  FFMatrix gen_cosets;    // one row per generator
};

struct PhantomVerdict {
  Answer answer = Answer::Unknown;
  std::optional<ModulePtr> witness;      // No via Ext^{n+1}(X, f) != 0
  std::optional<PMembership> certificate;  // Yes via delta.f in p; also used for
                                           // authoritative No under a complete registry
  std::string detail;
};

class NFrob {
 public:
  NFrob(FrobeniusContext ctx, std::shared_ptr<Session> session);

  const FrobeniusContext& ctx() const { return ctx_; }
  Session& session() { return *session_; }
  ExtCalc& ext() { return *ext_; }

  // Validates registry members, the n = 0 registry convention, and the
  // gorenstein claim (pd of every indecomposable injective <= n).
  void validate_context();

  Answer is_n_projective(const ModulePtr& m);
  Answer is_n_injective(const ModulePtr& m);

  // Canonical unit conflations. k = 0 yields the identity unit.
  UnitClass down_unit(const ModulePtr& n_obj, std::size_t k);
  UnitClass up_unit(const ModulePtr& y, std::size_t k);   // gorenstein-gated for k >= 1

  PSubspace p_subspace(const ModulePtr& x, const ModulePtr& y);          // pull-back side
  PSubspace p_subspace_pushout(const ModulePtr& x, const ModulePtr& y);  // push-out side
  PMembership p_membership(const ExtClass& gamma);

  PhantomVerdict is_phantom(const Morphism& f);
  Answer is_invertible(const Morphism& f, std::string* detail = nullptr);

  // Inflations a1 : d1.start -> W and a2 : d2.start -> W with n-projective
  // cokernels and a1.d1 = a2.d2 exactly; common is the shared class.
  struct AngledPair {
    Morphism a1, a2;
    ExtClass common;
    UnitClass common_unit;
  };
  AngledPair angled_pair(const UnitClass& d1, const UnitClass& d2);

  // Deflations a1 : T' ->> u1.end and a2 : T' ->> u2.end with n-projective
  // kernels and u1.a1 = u2.a2 exactly.
  struct CoangledPair {
    Morphism a1, a2;
    ExtClass common;
  };
  CoangledPair coangled_pair(const UnitClass& u1, const UnitClass& u2);

  // gamma' in Ext^n(X', Y) with gamma - gamma'.a in p, for a : X -> X'
  // n-Ext-invertible and gamma in Ext^n(X, Y).
  ExtClass solve_mod_p_right(const ExtClass& gamma, const Morphism& a);
  // beta' in Ext^n(Y, X) with beta - a.beta' in p, for beta in Ext^n(Y, X').
  ExtClass solve_mod_p_left(const ExtClass& beta, const Morphism& a);

  // Ext^{n+1}(X, f) as a matrix on canonical coset coordinates.
  FFMatrix ext_action_matrix(const ModulePtr& x, const Morphism& f, std::size_t degree);

 private:
  FrobeniusContext ctx_;
  std::shared_ptr<Session> session_;
  std::shared_ptr<ExtCalc> ext_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, PSubspace> psub_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, PSubspace> psub_push_;
  std::map<std::uint64_t, Answer> nproj_, ninj_;

  UnitClass unit_from_chain(const ModulePtr& end, ExtensionChain chain);
  friend class StableCat;
};

}  // namespace phantomlab
