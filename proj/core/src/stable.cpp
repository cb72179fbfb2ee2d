#include "phantomlab/stable.hpp"

#include <algorithm>

#include "phantomlab/errors.hpp"

namespace phantomlab {

std::vector<Fel> StableHom::project(const ExtClass& gamma) const {
  if (gamma.space != ext) throw InputError("project: class lives in a different Ext space");
  auto reduced = psub.sub.reduce(gamma.coset());
  auto coords = reps.coordinates(reduced);
  if (!coords) throw InternalCheck("stable projection failed");
  return *coords;
}

ExtClass StableHom::representative(std::span<const Fel> coords) const {
  if (coords.size() != dim()) throw InputError("representative: wrong coordinate length");
  auto coset = reps.basis().apply_row(coords);
  return ExtClass{ext, ext->cocycle_from_coset(coset)};
}

StableCat::StableCat(std::shared_ptr<NFrob> frob) : frob_(std::move(frob)) {}

StableHomPtr StableCat::stable_hom(const ModulePtr& m, const ModulePtr& n) {
  auto key = std::make_pair(m->id(), n->id());
  auto it = homs_.find(key);
  if (it != homs_.end()) return it->second;

  auto hom = std::make_shared<StableHom>();
  hom->m = m;
  hom->n = n;
  hom->anchor = frob_->down_unit(n, ctx().n);
  hom->ext = ext().ext_space(m, hom->anchor.start, ctx().n);
  hom->psub = frob_->p_subspace(m, hom->anchor.start);
  FFMatrix rows(ctx().algebra->p, hom->ext->dim(), hom->ext->dim());
  for (std::size_t i = 0; i < hom->ext->dim(); ++i) {
    std::vector<Fel> unit(hom->ext->dim(), 0);
    unit[i] = 1;
    rows.set_row(i, hom->psub.sub.reduce(unit));
  }
  hom->reps = Subspace::from_rows(rows);
  if (hom->reps.dim() != hom->ext->dim() - hom->psub.sub.dim())
    throw InternalCheck("stable_hom: quotient bookkeeping failed");
  homs_[key] = hom;
  return hom;
}

StableMorphism StableCat::zero(const ModulePtr& m, const ModulePtr& n) {
  auto hom = stable_hom(m, n);
  return StableMorphism{hom, std::vector<Fel>(hom->dim(), 0)};
}

StableMorphism StableCat::identity(const ModulePtr& m) {
  auto hom = stable_hom(m, m);
  return StableMorphism{hom, hom->project(hom->anchor.cls)};
}

StableMorphism StableCat::from_coords(const StableHomPtr& space, std::vector<Fel> coords) {
  if (coords.size() != space->dim()) throw InputError("from_coords: wrong length");
  return StableMorphism{space, std::move(coords)};
}

StableMorphism StableCat::project_into(const ModulePtr& m, const ModulePtr& n,
                                       const ExtClass& cls) {
  auto hom = stable_hom(m, n);
  return StableMorphism{hom, hom->project(cls)};
}

StableMorphism StableCat::normalize(const FreePair& pair) {
  const ModulePtr& m = pair.cls.space->m;
  const ModulePtr& n = pair.delta.end;
  auto hom = stable_hom(m, n);
  if (pair.delta.start == hom->anchor.start &&
      pair.delta.cls.coset() == hom->anchor.cls.coset())
    return StableMorphism{hom, hom->project(pair.cls)};

  auto ap = frob_->angled_pair(hom->anchor, pair.delta);
  ExtClass bg = ext().pushout(ap.a2, pair.cls);
  ExtClass x = frob_->solve_mod_p_left(bg, ap.a1);
  return StableMorphism{hom, hom->project(x)};
}

bool StableCat::equivalent(const FreePair& x, const FreePair& y) {
  if (x.delta.end != y.delta.end || x.delta.length != y.delta.length)
    throw InputError("equivalent: pairs target different objects");
  auto test = [&](const FreePair& u, const FreePair& v) {
    auto ap = frob_->angled_pair(u.delta, v.delta);
    ExtClass d = ext().baer_sum(ext().pushout(ap.a1, u.cls),
                                ext().negate(ext().pushout(ap.a2, v.cls)));
    return frob_->p_membership(d).member;
  };
  bool first = test(x, y);
  if (ctx().paranoid) {
    bool swapped = test(y, x);
    if (swapped != first)
      throw InternalCheck("equivalent: verdict depends on the angled pair orientation");
  }
  return first;
}

StableMorphism StableCat::compose_stable(const StableMorphism& beta, const StableMorphism& gamma) {
  if (beta.space->m != gamma.space->n)
    throw InputError("compose_stable: middle objects differ");
  const ModulePtr& m = gamma.space->m;
  const ModulePtr& k = beta.space->n;
  if (gamma.is_zero_stable() || beta.is_zero_stable()) return zero(m, k);
  auto memo_key = std::make_tuple(beta.space.get(), gamma.space.get(), beta.coords, gamma.coords);
  if (auto hit = compose_memo_.find(memo_key); hit != compose_memo_.end()) return hit->second;

  auto run = [&](const ExtClass& grep, const ExtClass& brep, bool swap_legs) {
    ExtCalc::Ruf r = ext().ruf(grep);
    UnitClass down = gamma.space->anchor;   // starts at omega^n N, ends at N
    UnitClass up{down.start, r.delta.end, ctx().n, r.delta.cls, r.delta.chain};
    NFrob::CoangledPair cp =
        swap_legs ? [&] {
          NFrob::CoangledPair c = frob_->coangled_pair(up, down);
          std::swap(c.a1, c.a2);
          return c;
        }()
                  : frob_->coangled_pair(down, up);
    // cp.a1 : T' ->> N, cp.a2 : T' ->> N'
    ExtClass ba = ext().pullback(brep, cp.a1);
    ExtClass y = frob_->solve_mod_p_right(ba, cp.a2);
    ExtClass res = ext().pullback(y, r.f);
    return project_into(m, k, res);
  };

  ExtClass grep = gamma.space->representative(gamma.coords);
  ExtClass brep = beta.space->representative(beta.coords);
  StableMorphism out = run(grep, brep, false);

  if (ctx().paranoid) {
    // independent representatives modulo p and swapped co-angled legs
    Rng rng(ctx().seed ^ 0x9090909090ULL);
    auto perturb = [&](const ExtClass& cls, const PSubspace& p) {
      ExtClass out2 = cls;
      for (std::size_t g = 0; g < p.gens.size(); ++g) {
        Fel c = (Fel)rng.below(ctx().algebra->p);
        if (!c) continue;
        const auto& gen = p.gens[g];
        ExtSpacePtr esp = ext().ext_space(ctx().registry[gen.registry_index], cls.space->n, ctx().n);
        std::vector<Fel> unit(esp->dim(), 0);
        unit[gen.ext_index] = 1;
        ExtClass theta = ext().make_class(esp, esp->cocycle_from_coset(unit));
        auto homs = hom_space(cls.space->m, ctx().registry[gen.registry_index]);
        out2 = ext().baer_sum(out2, ext().scale_class(c, ext().pullback(theta, homs[gen.hom_index])));
      }
      return out2;
    };
    ExtClass grep2 = perturb(grep, gamma.space->psub);
    ExtClass brep2 = perturb(brep, beta.space->psub);
    StableMorphism redo = run(grep2, brep2, true);
    if (redo.coords != out.coords)
      throw InternalCheck("compose_stable: paranoid recomputation disagrees");
  }
  compose_memo_.emplace(std::move(memo_key), out);
  return out;
}

StableMorphism StableCat::add_stable(const StableMorphism& x, const StableMorphism& y) {
  if (x.space != y.space) throw InputError("add_stable: different hom-spaces");
  return StableMorphism{x.space, add_vectors(ctx().algebra->p, x.coords, y.coords)};
}

StableMorphism StableCat::negate_stable(const StableMorphism& x) {
  return StableMorphism{x.space, scale_vector(ctx().algebra->p, ctx().algebra->p - 1, x.coords)};
}

StableMorphism StableCat::add_free(const FreePair& x, const FreePair& y) {
  auto ap = frob_->angled_pair(x.delta, y.delta);
  ExtClass sum = ext().baer_sum(ext().pushout(ap.a1, x.cls), ext().pushout(ap.a2, y.cls));
  return normalize(FreePair{sum, ap.common_unit});
}

StableMorphism StableCat::functor_T(const Morphism& f) {
  auto hom = stable_hom(f.source, f.target);
  ExtClass cls = ext().pullback(hom->anchor.cls, f);
  return StableMorphism{hom, hom->project(cls)};
}

StableCat::StableInverse StableCat::stable_inverse(const StableMorphism& x) {
  const ModulePtr& m = x.space->m;
  const ModulePtr& n = x.space->n;
  auto back = stable_hom(n, m);
  auto end_n = stable_hom(n, n);
  auto end_m = stable_hom(m, m);
  std::vector<Fel> idn = identity(n).coords;
  std::vector<Fel> idm = identity(m).coords;

  std::size_t bd = back->dim();
  Fel p = ctx().algebra->p;
  FFMatrix sys(p, end_n->dim() + end_m->dim(), bd);
  for (std::size_t i = 0; i < bd; ++i) {
    std::vector<Fel> unit(bd, 0);
    unit[i] = 1;
    StableMorphism e{back, unit};
    auto cn = compose_stable(x, e).coords;   // x o e : N -> N
    auto cm = compose_stable(e, x).coords;   // e o x : M -> M
    for (std::size_t r = 0; r < cn.size(); ++r) sys.set(r, i, cn[r]);
    for (std::size_t r = 0; r < cm.size(); ++r) sys.set(end_n->dim() + r, i, cm[r]);
  }
  std::vector<Fel> rhs = idn;
  rhs.insert(rhs.end(), idm.begin(), idm.end());
  auto sol = sys.solve(rhs);
  if (!sol) return {false, zero(n, m)};
  return {true, StableMorphism{back, *sol}};
}

bool StableCat::is_iso_stable(const StableMorphism& x) { return stable_inverse(x).invertible; }

UnitClass StableCat::padded_down_unit(const ModulePtr& n_obj) {
  ResView res = frob_->session().proj_res(n_obj, 1);
  ModulePtr pad = ctx().registry.empty() ? res.term(0) : ctx().registry.front();
  DirectSum w = direct_sum({res.term(0), pad});
  Morphism deflation = compose(res.cover(0), w.projections[0]);
  auto ker = kernel(deflation);
  Conflation c{ker.inclusion, deflation};
  c.validate();
  UnitClass u;
  u.end = n_obj;
  u.length = 1;
  u.start = ker.module;
  u.chain = {c};
  u.cls = ext().class_of_extension(n_obj, u.chain);
  return u;
}

StableMorphism StableCat::omega_morphism(const Morphism& f) {
  Morphism fp = ext().syzygy_lift(f, 1);
  StableMorphism primary = functor_T(fp);

  if (ctx().paranoid && ctx().n >= 1) {
    // recompute across an independently padded unit conflation of the source
    const ModulePtr& m = f.source;
    const ModulePtr& n = f.target;
    ResView rn = frob_->session().proj_res(n, 1);
    UnitClass padded = padded_down_unit(m);
    const Conflation& c = padded.chain[0];
    Morphism u0 = lift_through_deflation(rn.cover(0), compose(f, c.deflation));
    Morphism fpp = factor_through_injection(rn.incl(0), compose(u0, c.inflation));
    UnitClass can = frob_->down_unit(m, 1);
    auto ap = frob_->angled_pair(can, padded);
    auto anchor = stable_hom(syz_object(m), syz_object(n))->anchor;
    ExtClass df = ext().pullback(anchor.cls, fpp);
    ExtClass z = frob_->solve_mod_p_right(df, ap.a2);
    ExtClass res = ext().pullback(z, ap.a1);
    StableMorphism second = project_into(syz_object(m), syz_object(n), res);
    if (second.coords != primary.coords)
      throw InternalCheck("omega_morphism: lift-independence recomputation disagrees");
  }
  return primary;
}

ModulePtr StableCat::syz_object(const ModulePtr& m) { return frob_->session().syzygy(m, 1); }

ModulePtr StableCat::cosyz_object(const ModulePtr& m) {
  if (!ctx().gorenstein_mode)
    throw UnsupportedContext("cosyzygy needs gorenstein_mode");
  return ext().cosyzygy(m, 1);
}

StableMorphism StableCat::syz_morphism(const StableMorphism& x) {
  const ModulePtr& m = x.space->m;
  const ModulePtr& n = x.space->n;
  ExtClass grep = x.space->representative(x.coords);
  ExtCalc::Ruf r = ext().ruf(grep);
  const ModulePtr& nprime = r.delta.end;

  Morphism gp = ext().syzygy_lift(r.f, 1);
  StableMorphism y = functor_T(gp);   // in hom(omega M, omega N')
  if (ctx().n == 0 && nprime == n) return y;

  // re-anchor omega N' to omega N through the co-angled comparison
  UnitClass down = x.space->anchor;
  UnitClass up{down.start, r.delta.end, ctx().n, r.delta.cls, r.delta.chain};
  NFrob::CoangledPair cp = frob_->coangled_pair(down, up);
  StableMorphism wa = omega_morphism(cp.a1);   // omega T' -> omega N
  StableMorphism wb = omega_morphism(cp.a2);   // omega T' -> omega N'
  StableInverse inv = stable_inverse(wb);
  if (!inv.invertible)
    throw InternalCheck("syz_morphism: comparison deflation not stably invertible");
  StableMorphism tau = compose_stable(wa, inv.inverse);   // omega N' -> omega N
  StableMorphism out = compose_stable(tau, y);
  if (out.space != stable_hom(syz_object(m), syz_object(n)))
    throw InternalCheck("syz_morphism: landed in the wrong hom-space");
  return out;
}

StableMorphism StableCat::density_comparison(const ModulePtr& m) {
  ModulePtr c = cosyz_object(m);
  if (c->is_zero()) {
    // both M and omega(omega^{-1} M) vanish stably; the zero map compares them
    return zero(m, syz_object(c));
  }
  // dual of the first conflation of the opposite-side resolution: M -> I -> omega^{-1}M
  ResView ropp = frob_->session().proj_res(frob_->session().dual(m), 1);
  Conflation hull = ext().dual_conflation(Conflation{ropp.incl(0), ropp.cover(0)});
  UnitClass u_inj;
  u_inj.start = m;
  u_inj.end = c;
  u_inj.length = 1;
  u_inj.chain = {hull};
  u_inj.cls = ext().class_of_extension(c, u_inj.chain);

  UnitClass u_can = frob_->down_unit(c, 1);
  auto ap = frob_->angled_pair(u_can, u_inj);
  // legs: a1 : omega(omega^{-1}M) -> W, a2 : M -> W, both stably invertible
  StableMorphism ta2 = functor_T(ap.a2);
  StableMorphism ta1 = functor_T(ap.a1);
  StableInverse inv = stable_inverse(ta1);
  if (!inv.invertible)
    throw InternalCheck("density_comparison: canonical leg not stably invertible");
  return compose_stable(inv.inverse, ta2);
}

FFMatrix StableCat::syz_matrix(const ModulePtr& m, const ModulePtr& n) {
  auto hom = stable_hom(m, n);
  auto hom2 = stable_hom(syz_object(m), syz_object(n));
  FFMatrix out(ctx().algebra->p, hom2->dim(), hom->dim());
  for (std::size_t i = 0; i < hom->dim(); ++i) {
    std::vector<Fel> unit(hom->dim(), 0);
    unit[i] = 1;
    auto img = syz_morphism(StableMorphism{hom, unit}).coords;
    for (std::size_t r = 0; r < img.size(); ++r) out.set(r, i, img[r]);
  }
  return out;
}

}  // namespace phantomlab
