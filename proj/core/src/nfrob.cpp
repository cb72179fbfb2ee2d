#include "phantomlab/nfrob.hpp"

#include <algorithm>

#include "phantomlab/errors.hpp"

namespace phantomlab {

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "unknown";
  }
}

NFrob::NFrob(FrobeniusContext ctx, std::shared_ptr<Session> session)
    : ctx_(std::move(ctx)), session_(std::move(session)) {
  if (!session_) session_ = std::make_shared<Session>(ctx_.algebra);
  ext_ = std::make_shared<ExtCalc>(session_);
  validate_context();
}

void NFrob::validate_context() {
  if (!ctx_.algebra) throw InputError("context: missing algebra");
  for (const auto& m : ctx_.registry)
    if (m->algebra() != ctx_.algebra) throw InputError("context: registry module over wrong algebra");

  if (ctx_.gorenstein_mode) {
    // injdim(A) <= n on both sides: every indecomposable injective has pd <= n,
    // and dually over the opposite algebra.
    for (std::size_t i = 0; i < ctx_.algebra->n_idempotents(); ++i) {
      ModulePtr inj = session_->dual(projective_module(session_->opposite(), i));
      if (!session_->projective_dimension(inj, ctx_.n))
        throw InputError("context: gorenstein_mode claimed but an injective has pd > n");
      ModulePtr inj_op = session_->dual(projective_module(ctx_.algebra, i));
      if (!session_->projective_dimension(inj_op, ctx_.n))
        throw InputError("context: gorenstein_mode claimed but an opposite-side injective has pd > n");
    }
  }
  for (const auto& m : ctx_.registry) {
    if (is_n_projective(m) != Answer::Yes)
      throw InputError("context: registry member " + m->name() + " is not n-projective");
  }
  if (ctx_.n == 0) {
    for (const auto& m : ctx_.registry)
      if (!session_->projective_dimension(m, 0))
        throw InputError("context: at n = 0 the registry must consist of projectives");
  }
}

Answer NFrob::is_n_projective(const ModulePtr& m) {
  auto it = nproj_.find(m->id());
  if (it != nproj_.end()) return it->second;
  Answer verdict = Answer::Unknown;
  if (m->is_zero()) {
    verdict = Answer::Yes;
  } else if (ctx_.gorenstein_mode || ctx_.n == 0) {
    // complete: Ext^{n+1}(M, S) = 0 for all simples <=> pd M <= n; the
    // minimal resolution decides it.
    verdict = session_->projective_dimension(m, ctx_.n) ? Answer::Yes : Answer::No;
  } else {
    // sound refutation sweep; Unknown otherwise
    verdict = Answer::Unknown;
    if (session_->projective_dimension(m, ctx_.n)) verdict = Answer::Yes;
    else {
      for (const auto& x : ctx_.test_family) {
        for (std::size_t i = ctx_.n + 1; i <= ctx_.n + ctx_.sweep_depth && verdict == Answer::Unknown; ++i)
          if (ext_->ext_space(m, x, i)->dim() != 0) verdict = Answer::No;
        if (verdict != Answer::Unknown) break;
      }
    }
  }
  nproj_[m->id()] = verdict;
  return verdict;
}

Answer NFrob::is_n_injective(const ModulePtr& m) {
  auto it = ninj_.find(m->id());
  if (it != ninj_.end()) return it->second;
  Answer verdict;
  if (m->is_zero()) verdict = Answer::Yes;
  else if (ctx_.gorenstein_mode || ctx_.n == 0) {
    // Ext^{n+1}(S, M) = 0 for all simples <=> injdim M <= n <=> pd of the
    // dual over the opposite algebra <= n.
    verdict = session_->projective_dimension(session_->dual(m), ctx_.n) ? Answer::Yes : Answer::No;
  } else {
    verdict = Answer::Unknown;
    if (session_->projective_dimension(session_->dual(m), ctx_.n)) verdict = Answer::Yes;
    else {
      for (const auto& x : ctx_.test_family) {
        for (std::size_t i = ctx_.n + 1; i <= ctx_.n + ctx_.sweep_depth && verdict == Answer::Unknown; ++i)
          if (ext_->ext_space(x, m, i)->dim() != 0) verdict = Answer::No;
        if (verdict != Answer::Unknown) break;
      }
    }
  }
  ninj_[m->id()] = verdict;
  return verdict;
}

UnitClass NFrob::down_unit(const ModulePtr& n_obj, std::size_t k) {
  UnitClass u;
  u.end = n_obj;
  u.length = k;
  if (k == 0) {
    u.start = n_obj;
    u.cls = ext_->from_hom(identity_morphism(n_obj));
    return u;
  }
  ResView res = session_->proj_res(n_obj, k + 1);
  u.start = res.syzygy(k);
  u.cls = ext_->canonical_unit(n_obj, k);
  for (std::size_t i = 0; i < k; ++i) u.chain.push_back(Conflation{res.incl(i), res.cover(i)});
  return u;
}

UnitClass NFrob::up_unit(const ModulePtr& y, std::size_t k) {
  if (k >= 1 && !ctx_.gorenstein_mode && ctx_.n >= 1)
    throw UnsupportedContext("up-direction unit conflations need gorenstein_mode");
  ExtCalc::UpUnit up = ext_->canonical_up_unit(y, k);
  UnitClass u;
  u.start = y;
  u.end = up.end;
  u.length = k;
  u.cls = up.cls;
  u.chain = up.chain;
  return u;
}

PSubspace NFrob::p_subspace(const ModulePtr& x, const ModulePtr& y) {
  auto key = std::make_pair(x->id(), y->id());
  auto it = psub_.find(key);
  if (it != psub_.end()) return it->second;

  ExtSpacePtr sp = ext_->ext_space(x, y, ctx_.n);
  PSubspace out;
  out.space = sp;
  out.complete = ctx_.registry_complete;
  std::vector<std::vector<Fel>> rows;
  for (std::size_t r = 0; r < ctx_.registry.size(); ++r) {
    const ModulePtr& proj = ctx_.registry[r];
    auto homs = hom_space(x, proj);
    ExtSpacePtr esp = ext_->ext_space(proj, y, ctx_.n);
    for (std::size_t h = 0; h < homs.size(); ++h)
      for (std::size_t e = 0; e < esp->dim(); ++e) {
        std::vector<Fel> unit(esp->dim(), 0);
        unit[e] = 1;
        ExtClass theta = ext_->make_class(esp, esp->cocycle_from_coset(unit));
        ExtClass pulled = ext_->pullback(theta, homs[h]);
        rows.push_back(pulled.coset());
        out.gens.push_back({r, h, e});
      }
  }
  FFMatrix gen_rows(sp->cocycles.p(), rows.size(), sp->dim());
  for (std::size_t i = 0; i < rows.size(); ++i) gen_rows.set_row(i, rows[i]);
  out.gen_cosets = gen_rows;
  out.sub = Subspace::from_rows(gen_rows);
  psub_[key] = out;
  return out;
}

PSubspace NFrob::p_subspace_pushout(const ModulePtr& x, const ModulePtr& y) {
  auto key = std::make_pair(x->id(), y->id());
  auto it = psub_push_.find(key);
  if (it != psub_push_.end()) return it->second;

  ExtSpacePtr sp = ext_->ext_space(x, y, ctx_.n);
  PSubspace out;
  out.space = sp;
  out.complete = ctx_.registry_complete;
  std::vector<std::vector<Fel>> rows;
  for (std::size_t r = 0; r < ctx_.registry.size(); ++r) {
    const ModulePtr& proj = ctx_.registry[r];
    auto homs = hom_space(proj, y);
    ExtSpacePtr esp = ext_->ext_space(x, proj, ctx_.n);
    for (std::size_t h = 0; h < homs.size(); ++h)
      for (std::size_t e = 0; e < esp->dim(); ++e) {
        std::vector<Fel> unit(esp->dim(), 0);
        unit[e] = 1;
        ExtClass theta = ext_->make_class(esp, esp->cocycle_from_coset(unit));
        ExtClass pushed = ext_->pushout(homs[h], theta);
        rows.push_back(pushed.coset());
        out.gens.push_back({r, h, e});
      }
  }
  FFMatrix gen_rows(sp->cocycles.p(), rows.size(), sp->dim());
  for (std::size_t i = 0; i < rows.size(); ++i) gen_rows.set_row(i, rows[i]);
  out.gen_cosets = gen_rows;
  out.sub = Subspace::from_rows(gen_rows);
  psub_push_[key] = out;
  return out;
}

PMembership NFrob::p_membership(const ExtClass& gamma) {
  PSubspace p = p_subspace(gamma.space->m, gamma.space->n);
  PMembership out;
  out.authoritative = p.complete;
  auto coset = gamma.coset();
  out.member = p.sub.contains(coset);
  if (out.member && !p.gens.empty()) {
    auto sol = p.gen_cosets.transposed().solve(coset);
    if (!sol) throw InternalCheck("p_membership: member without expressible certificate");
    out.coefficients = *sol;
  }
  return out;
}

PhantomVerdict NFrob::is_phantom(const Morphism& f) {
  PhantomVerdict v;
  UnitClass delta = down_unit(f.target, ctx_.n);
  ExtClass df = ext_->pullback(delta.cls, f);
  PMembership mem = p_membership(df);
  if (mem.member) {
    v.answer = Answer::Yes;
    v.certificate = mem;
    v.detail = ctx_.n == 0 ? "f factors through the projective registry"
                           : "delta.f lies in the registry-generated p-subgroup";
    return v;
  }
  // refutation sweep: Ext^{n+1}(X, f) != 0 for some X in the family
  for (const auto& x : ctx_.test_family) {
    FFMatrix action = ext_action_matrix(x, f, ctx_.n + 1);
    if (!action.is_zero()) {
      v.answer = Answer::No;
      v.witness = x;
      v.detail = "Ext^{n+1}(X, f) != 0 for X = " + x->name();
      return v;
    }
  }
  if (ctx_.registry_complete) {
    v.answer = Answer::No;
    v.certificate = mem;
    v.detail = "delta.f escapes the p-subgroup of a complete registry";
    return v;
  }
  v.answer = Answer::Unknown;
  v.detail = "no certificate and no witness within the test family";
  return v;
}

FFMatrix NFrob::ext_action_matrix(const ModulePtr& x, const Morphism& f, std::size_t degree) {
  ExtSpacePtr src = ext_->ext_space(x, f.source, degree);
  ExtSpacePtr dst = ext_->ext_space(x, f.target, degree);
  FFMatrix action(ctx_.algebra->p, dst->dim(), src->dim());
  for (std::size_t e = 0; e < src->dim(); ++e) {
    std::vector<Fel> unit(src->dim(), 0);
    unit[e] = 1;
    ExtClass theta = ext_->make_class(src, src->cocycle_from_coset(unit));
    auto out = ext_->pushout(f, theta).coset();
    for (std::size_t r = 0; r < dst->dim(); ++r) action.set(r, e, out[r]);
  }
  return action;
}

Answer NFrob::is_invertible(const Morphism& f, std::string* detail) {
  auto say = [&](const std::string& s) {
    if (detail) *detail = s;
  };
  if (f.is_isomorphism()) {
    say("isomorphism in C");
    return Answer::Yes;
  }
  auto ker = kernel(f);
  auto cok = cokernel(f);
  if (is_n_projective(ker.module) == Answer::Yes && is_n_projective(cok.module) == Answer::Yes) {
    say("kernel and cokernel are n-projective");
    return Answer::Yes;
  }
  for (const auto& x : ctx_.test_family) {
    FFMatrix action = ext_action_matrix(x, f, ctx_.n + 1);
    bool bij = action.rows() == action.cols() && action.rank() == action.rows();
    if (!bij) {
      say("Ext^{n+1}(X, f) not bijective for X = " + x->name());
      return Answer::No;
    }
  }
  if (ctx_.registry_complete && ctx_.gorenstein_mode) {
    say("Ext^{n+1}(-, f) bijective across the complete test family");
    return Answer::Yes;
  }
  say("no decision");
  return Answer::Unknown;
}

UnitClass NFrob::unit_from_chain(const ModulePtr& end, ExtensionChain chain) {
  UnitClass u;
  u.end = end;
  u.length = chain.size();
  u.start = chain.empty() ? end : chain.back().inflation.source;
  u.cls = chain.empty() ? ext_->from_hom(identity_morphism(end))
                        : ext_->class_of_extension(end, chain);
  u.chain = std::move(chain);
  return u;
}

NFrob::AngledPair NFrob::angled_pair(const UnitClass& d1, const UnitClass& d2) {
  if (d1.end != d2.end || d1.length != d2.length)
    throw InputError("angled_pair: units must share end object and length");
  std::size_t k = d1.length;
  const ModulePtr& nmod = d1.end;

  AngledPair out;
  if (k == 0) {
    out.a1 = identity_morphism(nmod);
    out.a2 = identity_morphism(nmod);
    out.common = d1.cls;
    out.common_unit = d1;
    return out;
  }

  if (k == 1 && d1.chain.size() == 1 && d2.chain.size() == 1) {
    // pull-back construction: W = ker((pi, -pi') : P + Q -> N)
    const Conflation& c1 = d1.chain[0];
    const Conflation& c2 = d2.chain[0];
    DirectSum pq = direct_sum({c1.deflation.source, c2.deflation.source});
    Morphism diff = subtract(compose(c1.deflation, pq.projections[0]),
                             compose(c2.deflation, pq.projections[1]));
    auto ker = kernel(diff);
    out.a1 = factor_through_injection(ker.inclusion, compose(pq.injections[0], c1.inflation));
    Fel p = ctx_.algebra->p;
    out.a2 = factor_through_injection(
        ker.inclusion, compose(pq.injections[1], scale(p - 1, c2.inflation)));
    Conflation common_chain{ker.inclusion, diff};
    common_chain.validate();
    out.common_unit = unit_from_chain(nmod, {common_chain});
    out.common = out.common_unit.cls;
  } else {
    // padding construction through the canonical unit: w = (g1, -g2, incl),
    // W = coker(w); the incl component keeps the legs injective and kills
    // nothing of the class since incl . canonical = 0 exactly.
    ResView res = session_->proj_res(nmod, k + 1);
    Morphism g1 = ext_->luf(d1.cls);
    Morphism g2 = ext_->luf(d2.cls);
    DirectSum tri = direct_sum({d1.start, d2.start, res.term(k - 1)});
    Morphism w = add(subtract(compose(tri.injections[0], g1), compose(tri.injections[1], g2)),
                     compose(tri.injections[2], res.incl(k - 1)));
    if (!w.is_injective()) throw InternalCheck("angled_pair: padded comparison map not injective");
    auto cok = cokernel(w);
    out.a1 = compose(cok.projection, tri.injections[0]);
    out.a2 = compose(cok.projection, tri.injections[1]);
    out.common = ext_->pushout(out.a1, d1.cls);
    out.common_unit = UnitClass{out.common.space->n, nmod, k, out.common, {}};
  }

  // checked postconditions, never silent
  if (!out.a1.is_injective() || !out.a2.is_injective())
    throw InternalCheck("angled_pair: a leg is not an inflation");
  if (is_n_projective(cokernel(out.a1).module) != Answer::Yes ||
      is_n_projective(cokernel(out.a2).module) != Answer::Yes)
    throw InternalCheck("angled_pair: a cokernel is not n-projective");
  ExtClass via1 = ext_->pushout(out.a1, d1.cls);
  ExtClass via2 = ext_->pushout(out.a2, d2.cls);
  if (via1.coset() != via2.coset())
    throw InternalCheck("angled_pair: a1.d1 != a2.d2 as Ext cosets");
  if (via1.coset() != out.common.coset())
    throw InternalCheck("angled_pair: common class mismatch");
  return out;
}

NFrob::CoangledPair NFrob::coangled_pair(const UnitClass& u1, const UnitClass& u2) {
  if (u1.start != u2.start || u1.length != u2.length)
    throw InputError("coangled_pair: units must share start object and length");
  std::size_t k = u1.length;

  CoangledPair out;
  if (k == 0) {
    out.a1 = identity_morphism(u1.end);
    out.a2 = identity_morphism(u2.end);
    out.common = u1.cls;
    return out;
  }

  // dualize, take an angled pair over the opposite algebra, dualize back
  auto dualize_unit = [&](const UnitClass& u) {
    UnitClass du;
    du.end = session_->dual(u.start);
    du.start = session_->dual(u.end);
    du.length = u.length;
    ExtensionChain chain;
    for (std::size_t i = 0; i < u.chain.size(); ++i)
      chain.push_back(ext_->dual_conflation(u.chain[u.chain.size() - 1 - i]));
    du.chain = std::move(chain);
    du.cls = du.chain.empty() ? ext_->dual_class(u.cls)
                              : ext_->class_of_extension(du.end, du.chain);
    return du;
  };
  UnitClass du1 = dualize_unit(u1);
  UnitClass du2 = dualize_unit(u2);
  AngledPair ap = angled_pair(du1, du2);

  out.a1 = session_->dual(ap.a1);
  out.a2 = session_->dual(ap.a2);
  if (!out.a1.is_surjective() || !out.a2.is_surjective())
    throw InternalCheck("coangled_pair: a leg is not a deflation");
  if (is_n_projective(kernel(out.a1).module) != Answer::Yes ||
      is_n_projective(kernel(out.a2).module) != Answer::Yes)
    throw InternalCheck("coangled_pair: a kernel is not n-projective");
  ExtClass via1 = ext_->pullback(u1.cls, out.a1);
  ExtClass via2 = ext_->pullback(u2.cls, out.a2);
  if (via1.coset() != via2.coset())
    throw InternalCheck("coangled_pair: u1.a1 != u2.a2 as Ext cosets");
  out.common = via1;
  return out;
}

ExtClass NFrob::solve_mod_p_right(const ExtClass& gamma, const Morphism& a) {
  // gamma in Ext^n(X, Y), a : X -> X'; find gamma' in Ext^n(X', Y) with
  // gamma - gamma'.a in p(X, Y).
  if (a.source != gamma.space->m) throw InputError("solve_mod_p_right: a must start at the class source");
  if (a.is_isomorphism() && a.matrix == FFMatrix::identity(a.matrix.p(), a.matrix.rows()))
    return gamma;
  ExtSpacePtr tgt = ext_->ext_space(a.target, gamma.space->n, ctx_.n);
  PSubspace p = p_subspace(gamma.space->m, gamma.space->n);
  Fel fp = ctx_.algebra->p;
  std::size_t cols = tgt->dim() + p.gens.size();
  FFMatrix sys(fp, gamma.space->dim(), cols);
  std::vector<ExtClass> basis;
  for (std::size_t e = 0; e < tgt->dim(); ++e) {
    std::vector<Fel> unit(tgt->dim(), 0);
    unit[e] = 1;
    ExtClass theta = ext_->make_class(tgt, tgt->cocycle_from_coset(unit));
    basis.push_back(theta);
    auto col = ext_->pullback(theta, a).coset();
    for (std::size_t r = 0; r < col.size(); ++r) sys.set(r, e, col[r]);
  }
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    for (std::size_t r = 0; r < gamma.space->dim(); ++r)
      sys.set(r, tgt->dim() + g, p.gen_cosets.at(g, r));
  auto sol = sys.solve(gamma.coset());
  if (!sol) {
    std::string why;
    if (is_invertible(a, &why) != Answer::Yes)
      throw InputError("solve_mod_p_right: morphism is not n-Ext-invertible (" + why + ")");
    throw IncompleteRegistry("solve_mod_p_right: no solution; registry appears incomplete");
  }
  ExtClass out = ext_->zero_class(tgt);
  for (std::size_t e = 0; e < tgt->dim(); ++e)
    if ((*sol)[e]) out = ext_->baer_sum(out, ext_->scale_class((*sol)[e], basis[e]));
  return out;
}

ExtClass NFrob::solve_mod_p_left(const ExtClass& beta, const Morphism& a) {
  // beta in Ext^n(Y, X'), a : X -> X'; find beta' in Ext^n(Y, X) with
  // beta - a.beta' in p(Y, X').
  if (a.target != beta.space->n) throw InputError("solve_mod_p_left: a must end at the class target");
  if (a.is_isomorphism() && a.matrix == FFMatrix::identity(a.matrix.p(), a.matrix.rows()))
    return beta;
  ExtSpacePtr tgt = ext_->ext_space(beta.space->m, a.source, ctx_.n);
  PSubspace p = p_subspace(beta.space->m, beta.space->n);
  Fel fp = ctx_.algebra->p;
  std::size_t cols = tgt->dim() + p.gens.size();
  FFMatrix sys(fp, beta.space->dim(), cols);
  std::vector<ExtClass> basis;
  for (std::size_t e = 0; e < tgt->dim(); ++e) {
    std::vector<Fel> unit(tgt->dim(), 0);
    unit[e] = 1;
    ExtClass theta = ext_->make_class(tgt, tgt->cocycle_from_coset(unit));
    basis.push_back(theta);
    auto col = ext_->pushout(a, theta).coset();
    for (std::size_t r = 0; r < col.size(); ++r) sys.set(r, e, col[r]);
  }
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    for (std::size_t r = 0; r < beta.space->dim(); ++r)
      sys.set(r, tgt->dim() + g, p.gen_cosets.at(g, r));
  auto sol = sys.solve(beta.coset());
  if (!sol) {
    std::string why;
    if (is_invertible(a, &why) != Answer::Yes)
      throw InputError("solve_mod_p_left: morphism is not n-Ext-invertible (" + why + ")");
    throw IncompleteRegistry("solve_mod_p_left: no solution; registry appears incomplete");
  }
  ExtClass out = ext_->zero_class(tgt);
  for (std::size_t e = 0; e < tgt->dim(); ++e)
    if ((*sol)[e]) out = ext_->baer_sum(out, ext_->scale_class((*sol)[e], basis[e]));
  return out;
}

}  // namespace phantomlab
