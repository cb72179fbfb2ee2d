#include "phantomlab/module.hpp"

#include <algorithm>
#include <atomic>

#include "phantomlab/errors.hpp"

namespace phantomlab {

namespace {
std::atomic<std::uint64_t> next_module_id{1};
}

Module::Module(AlgebraPtr alg, std::vector<FFMatrix> action, std::string name)
    : alg_(std::move(alg)),
      action_(std::move(action)),
      name_(std::move(name)),
      id_(next_module_id++) {
  if (!alg_) throw InputError("module: null algebra");
  if (action_.size() != alg_->dim) throw InputError("module: need one action matrix per basis element");
  dim_ = action_.empty() ? 0 : action_[0].rows();
  validate();
}

FFMatrix Module::act(std::span<const Fel> algebra_elt) const {
  FFMatrix m(alg_->p, dim_, dim_);
  for (std::size_t i = 0; i < alg_->dim; ++i) {
    if (algebra_elt[i] == 0) continue;
    m = m + action_[i].scaled(algebra_elt[i]);
  }
  return m;
}

void Module::validate() const {
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw InputError("module: action matrix shape mismatch");
    if (a.p() != alg_->p) throw InputError("module: action matrix over wrong field");
  }
  if (act(alg_->unit) != FFMatrix::identity(alg_->p, dim_))
    throw InputError("module: unit does not act as identity");
  for (std::size_t i = 0; i < alg_->dim; ++i)
    for (std::size_t j = 0; j < alg_->dim; ++j)
      if (action_[i] * action_[j] != act(alg_->mult[i][j]))
        throw InputError("module: action does not respect multiplication at (" +
                         alg_->basis_labels[i] + "," + alg_->basis_labels[j] + ")");
}

ModulePtr make_module(AlgebraPtr alg, std::vector<FFMatrix> action, std::string name) {
  return std::make_shared<Module>(std::move(alg), std::move(action), std::move(name));
}

ModulePtr zero_module(AlgebraPtr alg) {
  std::vector<FFMatrix> action(alg->dim, FFMatrix(alg->p, 0, 0));
  return make_module(alg, std::move(action), "0");
}

ModulePtr regular_module(AlgebraPtr alg) {
  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < alg->dim; ++i) action.push_back(alg->left_mult(alg->basis_vector(i)));
  return make_module(alg, std::move(action), "A");
}

void Morphism::validate() const {
  if (!source || !target) throw InputError("morphism: null endpoint");
  if (source->algebra() != target->algebra())
    throw InputError("morphism: source and target over different algebras");
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw InputError("morphism: matrix shape mismatch");
  const auto& alg = *source->algebra();
  for (std::size_t i = 0; i < alg.dim; ++i)
    if (matrix * source->action(i) != target->action(i) * matrix)
      throw InputError("morphism: intertwining fails at basis element " + alg.basis_labels[i]);
}

Morphism identity_morphism(const ModulePtr& m) {
  return Morphism{m, m, FFMatrix::identity(m->algebra()->p, m->dim())};
}

Morphism zero_morphism(const ModulePtr& src, const ModulePtr& tgt) {
  return Morphism{src, tgt, FFMatrix(src->algebra()->p, tgt->dim(), src->dim())};
}

Morphism compose(const Morphism& second, const Morphism& first) {
  if (first.target != second.source)
    throw InputError("compose: middle objects differ");
  return Morphism{first.source, second.target, second.matrix * first.matrix};
}

Morphism add(const Morphism& a, const Morphism& b) {
  if (a.source != b.source || a.target != b.target) throw InputError("morphism sum: endpoint mismatch");
  return Morphism{a.source, a.target, a.matrix + b.matrix};
}

Morphism subtract(const Morphism& a, const Morphism& b) {
  if (a.source != b.source || a.target != b.target)
    throw InputError("morphism difference: endpoint mismatch");
  return Morphism{a.source, a.target, a.matrix - b.matrix};
}

Morphism scale(Fel c, const Morphism& a) {
  return Morphism{a.source, a.target, a.matrix.scaled(c % a.matrix.p())};
}

ModulePtr dual_module(const ModulePtr& m, AlgebraPtr op) {
  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < op->dim; ++i) action.push_back(m->action(i).transposed());
  return make_module(op, std::move(action), "D(" + m->name() + ")");
}

Morphism dual_morphism(const Morphism& f, AlgebraPtr op) {
  return Morphism{dual_module(f.target, op), dual_module(f.source, op), f.matrix.transposed()};
}

Subspace hom_subspace(const ModulePtr& m, const ModulePtr& n) {
  if (m->algebra() != n->algebra()) throw InputError("hom: modules over different algebras");
  const auto& alg = *m->algebra();
  Fp f(alg.p);
  std::size_t md = m->dim(), nd = n->dim();
  std::size_t unknowns = nd * md;   // row-major entries of T (nd x md)
  FFMatrix sys(alg.p, alg.dim * unknowns, unknowns);
  std::size_t eq = 0;
  for (std::size_t b = 0; b < alg.dim; ++b) {
    const FFMatrix& am = m->action(b);
    const FFMatrix& an = n->action(b);
    // T*am - an*T = 0, entry (r,c)
    for (std::size_t r = 0; r < nd; ++r)
      for (std::size_t c = 0; c < md; ++c) {
        for (std::size_t s = 0; s < md; ++s)
          sys.set(eq, r * md + s, f.add(sys.at(eq, r * md + s), am.at(s, c)));
        for (std::size_t s = 0; s < nd; ++s)
          sys.set(eq, s * md + c, f.sub(sys.at(eq, s * md + c), an.at(r, s)));
        ++eq;
      }
  }
  return Subspace::from_rows(sys.kernel_rows());
}

std::vector<Morphism> hom_space(const ModulePtr& m, const ModulePtr& n) {
  Subspace h = hom_subspace(m, n);
  std::vector<Morphism> basis;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto v = h.basis().row(i);
    FFMatrix t(m->algebra()->p, n->dim(), m->dim());
    for (std::size_t r = 0; r < n->dim(); ++r)
      for (std::size_t c = 0; c < m->dim(); ++c) t.set(r, c, v[r * m->dim() + c]);
    basis.push_back(Morphism{m, n, std::move(t)});
  }
  return basis;
}

namespace {

// Module structure on a subspace of M closed under the action. Basis rows B:
// inclusion = B^T, action solved from  B^T * a_sub(b) = a_M(b) * B^T.
SubmoduleResult submodule_from_subspace(const ModulePtr& m, const Subspace& s,
                                        const std::string& name) {
  const auto& alg = m->algebra();
  FFMatrix incl = s.basis().transposed();
  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < alg->dim; ++i) {
    auto sol = incl.solve_matrix(m->action(i) * incl);
    if (!sol) throw InternalCheck("submodule: subspace not closed under the action");
    action.push_back(std::move(*sol));
  }
  ModulePtr sub = make_module(alg, std::move(action), name);
  return {sub, Morphism{sub, m, std::move(incl)}};
}

}  // namespace

SubmoduleResult submodule_spanned(const ModulePtr& m, const FFMatrix& rows,
                                  const std::string& name) {
  Subspace span = Subspace::from_rows(rows);
  for (;;) {
    FFMatrix more = span.basis();
    for (std::size_t i = 0; i < m->algebra()->dim; ++i)
      more = more.vstack((m->action(i) * span.basis().transposed()).transposed());
    Subspace bigger = Subspace::from_rows(more);
    if (bigger.dim() == span.dim()) break;
    span = bigger;
  }
  return submodule_from_subspace(m, span, name);
}

QuotientResult quotient_module(const ModulePtr& m, const Subspace& sub,
                               const std::string& name) {
  const auto& alg = m->algebra();
  // check closure
  for (std::size_t i = 0; i < alg->dim; ++i)
    for (std::size_t r = 0; r < sub.dim(); ++r)
      if (!sub.contains(m->action(i).apply(sub.basis().row(r))))
        throw InputError("quotient: subspace is not a submodule");

  // Quotient coordinates = the non-pivot coordinates of the canonical
  // residue. lift places them back with zeros in pivot positions.
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m->dim(); ++c) {
      if (pi < sub.pivots().size() && sub.pivots()[pi] == c) ++pi;
      else free_cols.push_back(c);
    }
  }
  std::size_t qd = free_cols.size();
  FFMatrix proj(alg->p, qd, m->dim());
  for (std::size_t j = 0; j < m->dim(); ++j) {
    std::vector<Fel> e(m->dim(), 0);
    e[j] = 1;
    auto w = sub.reduce(e);
    for (std::size_t k = 0; k < qd; ++k) proj.set(k, j, w[free_cols[k]]);
  }
  FFMatrix lift(alg->p, m->dim(), qd);
  for (std::size_t k = 0; k < qd; ++k) lift.set(free_cols[k], k, 1);

  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < alg->dim; ++i) action.push_back(proj * (m->action(i) * lift));
  ModulePtr q = make_module(alg, std::move(action), name);
  return {q, Morphism{m, q, std::move(proj)}};
}

KernelResult kernel(const Morphism& f) {
  Subspace ker = Subspace::from_rows(f.matrix.kernel_rows());
  auto sub = submodule_from_subspace(f.source, ker, "ker(" + f.source->name() + "->" + f.target->name() + ")");
  return {sub.module, sub.inclusion};
}

CokernelResult cokernel(const Morphism& f) {
  Subspace im = Subspace::from_rows(f.matrix.image_rows());
  auto q = quotient_module(f.target, im, "coker");
  return {q.module, q.projection};
}

ImageResult image(const Morphism& f) {
  Subspace im = Subspace::from_rows(f.matrix.image_rows());
  auto sub = submodule_from_subspace(f.target, im, "im");
  auto co = sub.inclusion.matrix.solve_matrix(f.matrix);
  if (!co) throw InternalCheck("image: corestriction solve failed");
  return {sub.module, sub.inclusion, Morphism{f.source, sub.module, std::move(*co)}};
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw InputError("direct_sum: empty list");
  const auto& alg = parts[0]->algebra();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p->algebra() != alg) throw InputError("direct_sum: mixed algebras");
    total += p->dim();
  }
  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < alg->dim; ++i) {
    FFMatrix blk(alg->p, total, total);
    std::size_t off = 0;
    for (const auto& p : parts) {
      for (std::size_t r = 0; r < p->dim(); ++r)
        for (std::size_t c = 0; c < p->dim(); ++c) blk.set(off + r, off + c, p->action(i).at(r, c));
      off += p->dim();
    }
    action.push_back(std::move(blk));
  }
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "+") + p->name();
  ModulePtr sum = make_module(alg, std::move(action), name);

  DirectSum out{sum, {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    FFMatrix inj(alg->p, total, p->dim());
    FFMatrix prj(alg->p, p->dim(), total);
    for (std::size_t r = 0; r < p->dim(); ++r) {
      inj.set(off + r, r, 1);
      prj.set(r, off + r, 1);
    }
    out.injections.push_back(Morphism{p, sum, std::move(inj)});
    out.projections.push_back(Morphism{sum, p, std::move(prj)});
    off += p->dim();
  }
  return out;
}

void Conflation::validate() const {
  if (inflation.target != deflation.source) throw InputError("conflation: middle objects differ");
  inflation.validate();
  deflation.validate();
  if (!inflation.is_injective()) throw InputError("conflation: inflation not injective");
  if (!deflation.is_surjective()) throw InputError("conflation: deflation not surjective");
  Subspace im = Subspace::from_rows(inflation.matrix.image_rows());
  Subspace ker = Subspace::from_rows(deflation.matrix.kernel_rows());
  if (!(im == ker)) throw InputError("conflation: image(inflation) != kernel(deflation)");
}

Subspace radical_subspace_of(const ModulePtr& m) {
  const auto& alg = m->algebra();
  FFMatrix rows(alg->p, alg->radical.size() * m->dim(), m->dim());
  std::size_t k = 0;
  for (const auto& r : alg->radical) {
    FFMatrix ar = m->act(r);
    for (std::size_t j = 0; j < m->dim(); ++j) {
      std::vector<Fel> e(m->dim(), 0);
      e[j] = 1;
      rows.set_row(k++, ar.apply(e));
    }
  }
  return Subspace::from_rows(rows);
}

ModulePtr projective_module(AlgebraPtr alg, std::size_t idem) {
  if (idem >= alg->idempotents.size()) throw InputError("projective_module: idempotent index out of range");
  ModulePtr reg = regular_module(alg);
  FFMatrix row(alg->p, 1, alg->dim);
  row.set_row(0, alg->idempotents[idem]);
  auto sub = submodule_spanned(reg, row, "P" + std::to_string(idem + 1));
  return sub.module;
}

ModulePtr simple_module(AlgebraPtr alg, std::size_t idem) {
  ModulePtr proj = projective_module(alg, idem);
  auto q = quotient_module(proj, radical_subspace_of(proj), "S" + std::to_string(idem + 1));
  return q.module;
}

Conflation projective_cover(const ModulePtr& m) {
  const auto& alg = m->algebra();
  if (m->is_zero()) {
    ModulePtr z = zero_module(alg);
    return Conflation{Morphism{z, z, FFMatrix(alg->p, 0, 0)}, Morphism{z, m, FFMatrix(alg->p, 0, 0)}};
  }
  Subspace rad = radical_subspace_of(m);
  auto top = quotient_module(m, rad, "top");
  const Morphism& pi_top = top.projection;

  // one projective summand A*e_i per basis vector of e_i * top(M),
  // lifted to a generator v with e_i*v = v
  ModulePtr reg = regular_module(alg);
  std::vector<SubmoduleResult> proj_of;   // A*e_i with inclusion into A
  for (std::size_t i = 0; i < alg->idempotents.size(); ++i) {
    FFMatrix row(alg->p, 1, alg->dim);
    row.set_row(0, alg->idempotents[i]);
    proj_of.push_back(submodule_spanned(reg, row, "P" + std::to_string(i + 1)));
  }

  std::vector<ModulePtr> summands;
  std::vector<std::size_t> summand_idem;
  std::vector<std::vector<Fel>> generators;
  for (std::size_t i = 0; i < alg->idempotents.size(); ++i) {
    FFMatrix etop = top.module->act(alg->idempotents[i]);
    FFMatrix img = etop.image_rows();
    FFMatrix em = m->act(alg->idempotents[i]);
    for (std::size_t r = 0; r < img.rows(); ++r) {
      auto w = img.row(r);
      auto u = pi_top.matrix.solve(w);
      if (!u) throw InternalCheck("projective_cover: top projection not surjective");
      generators.push_back(em.apply(*u));
      summands.push_back(proj_of[i].module);
      summand_idem.push_back(i);
    }
  }
  if (summands.empty()) throw InternalCheck("projective_cover: nonzero module with zero top");

  DirectSum P = direct_sum(summands);
  FFMatrix defl(alg->p, m->dim(), P.module->dim());
  std::size_t off = 0;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    // basis vectors of A*e_i are coordinates of algebra elements x; send x to x*v
    const Morphism& incl_reg = proj_of[summand_idem[s]].inclusion;
    for (std::size_t c = 0; c < summands[s]->dim(); ++c) {
      std::vector<Fel> e(summands[s]->dim(), 0);
      e[c] = 1;
      std::vector<Fel> x = incl_reg.matrix.apply(e);   // algebra element coordinates
      std::vector<Fel> val = m->act(x).apply(generators[s]);
      for (std::size_t r = 0; r < m->dim(); ++r) defl.set(r, off + c, val[r]);
    }
    off += summands[s]->dim();
  }
  Morphism deflation{P.module, m, std::move(defl)};
  deflation.validate();
  if (!deflation.is_surjective()) throw InternalCheck("projective_cover: deflation not surjective");

  auto ker = kernel(deflation);
  // minimality: ker inside rad(P)
  Subspace radP = radical_subspace_of(P.module);
  for (std::size_t r = 0; r < ker.module->dim(); ++r) {
    std::vector<Fel> e(ker.module->dim(), 0);
    e[r] = 1;
    if (!radP.contains(ker.inclusion.matrix.apply(e)))
      throw InternalCheck("projective_cover: kernel escapes rad(P), cover not minimal");
  }
  return Conflation{ker.inclusion, deflation};
}

Conflation injective_hull(const ModulePtr& m, AlgebraPtr op) {
  const auto& alg = m->algebra();
  if (m->is_zero()) {
    ModulePtr z = zero_module(alg);
    return Conflation{Morphism{m, z, FFMatrix(alg->p, 0, 0)}, Morphism{z, z, FFMatrix(alg->p, 0, 0)}};
  }
  ModulePtr dm = dual_module(m, op);
  Conflation cover = projective_cover(dm);
  // dualize P' ->> D(M) to M -> D(P'); D(D(M)) = M on the nose
  ModulePtr I = dual_module(cover.deflation.source, alg);
  Morphism inflation{m, I, cover.deflation.matrix.transposed()};
  inflation.validate();
  auto co = cokernel(inflation);
  return Conflation{inflation, co.projection};
}

Morphism seeded_morphism(const ModulePtr& m, const ModulePtr& n, Rng& rng) {
  auto basis = hom_space(m, n);
  Morphism f = zero_morphism(m, n);
  Fel p = m->algebra()->p;
  for (const auto& h : basis) {
    Fel c = (Fel)rng.below(p);
    if (c) f = add(f, scale(c, h));
  }
  return f;
}

IsoResult iso_test(const ModulePtr& m, const ModulePtr& n, std::uint64_t seed, std::size_t tries) {
  if (m->dim() != n->dim()) return {IsoVerdict::Distinct, std::nullopt};
  if (m->dim() == 0) return {IsoVerdict::Isomorphic, std::nullopt};
  auto hmm = hom_subspace(m, m).dim();
  auto hnn = hom_subspace(n, n).dim();
  auto hmn = hom_space(m, n);
  if (hmm != hnn || hmn.size() != hom_subspace(n, m).dim())
    return {IsoVerdict::Distinct, std::nullopt};

  Fel p = m->algebra()->p;
  std::size_t k = hmn.size();
  if (k == 0) return {IsoVerdict::Distinct, std::nullopt};

  // exhaustive when the coefficient space is small, else seeded random
  double total = 1;
  for (std::size_t i = 0; i < k && total <= 4096; ++i) total *= p;
  if (total <= 4096) {
    std::vector<Fel> coeff(k, 0);
    for (;;) {
      Morphism f = zero_morphism(m, n);
      for (std::size_t i = 0; i < k; ++i)
        if (coeff[i]) f = add(f, scale(coeff[i], hmn[i]));
      if (f.is_isomorphism()) return {IsoVerdict::Isomorphic, f};
      std::size_t i = 0;
      while (i < k && coeff[i] == p - 1) coeff[i++] = 0;
      if (i == k) break;
      ++coeff[i];
    }
    return {IsoVerdict::Distinct, std::nullopt};
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < tries; ++t) {
    Morphism f = zero_morphism(m, n);
    for (std::size_t i = 0; i < k; ++i) {
      Fel c = (Fel)rng.below(p);
      if (c) f = add(f, scale(c, hmn[i]));
    }
    if (f.is_isomorphism()) return {IsoVerdict::Isomorphic, f};
  }
  return {IsoVerdict::Undetermined, std::nullopt};
}

}  // namespace phantomlab
