#include "phantomlab/ext.hpp"

#include <algorithm>

#include "phantomlab/errors.hpp"

namespace phantomlab {

std::vector<Fel> flatten_matrix(const FFMatrix& m) {
  std::vector<Fel> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

FFMatrix unflatten_matrix(Fel p, std::size_t rows, std::size_t cols, std::span<const Fel> v) {
  if (v.size() != rows * cols) throw InputError("unflatten: size mismatch");
  FFMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, v[r * cols + c]);
  return m;
}

Morphism lift_through_deflation(const Morphism& pi, const Morphism& phi) {
  if (pi.target != phi.target) throw InputError("lift: codomain mismatch");
  auto basis = hom_space(phi.source, pi.source);
  Fel p = phi.matrix.p();
  std::size_t amb = phi.matrix.rows() * phi.matrix.cols();
  FFMatrix sys(p, amb, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto col = flatten_matrix((pi.matrix * basis[j].matrix));
    for (std::size_t i = 0; i < amb; ++i) sys.set(i, j, col[i]);
  }
  auto sol = sys.solve(flatten_matrix(phi.matrix));
  if (!sol) throw InternalCheck("lift through deflation failed");
  Morphism lambda = zero_morphism(phi.source, pi.source);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((*sol)[j]) lambda = add(lambda, scale((*sol)[j], basis[j]));
  return lambda;
}

Morphism factor_through_injection(const Morphism& iota, const Morphism& phi) {
  if (iota.target != phi.target) throw InputError("factor: codomain mismatch");
  auto x = iota.matrix.solve_matrix(phi.matrix);
  if (!x) throw InternalCheck("factor through injection: image not contained");
  Morphism f{phi.source, iota.source, std::move(*x)};
  f.validate();
  return f;
}

std::vector<Fel> ExtSpace::coset_of(const FFMatrix& cocycle) const {
  auto reduced = coboundaries.reduce(flatten_matrix(cocycle));
  auto coords = quotient_reps.coordinates(reduced);
  if (!coords) throw InternalCheck("coset_of: not a cocycle for this space");
  return *coords;
}

FFMatrix ExtSpace::cocycle_from_coset(std::span<const Fel> coords) const {
  if (coords.size() != dim()) throw InputError("cocycle_from_coset: wrong length");
  auto v = quotient_reps.basis().apply_row(coords);
  return unflatten_matrix(cocycles.p(), n->dim(), term->dim(), v);
}

bool ExtSpace::is_cocycle(const FFMatrix& candidate) const {
  if (candidate.rows() != n->dim() || candidate.cols() != term->dim()) return false;
  return cocycles.contains(flatten_matrix(candidate));
}

ExtSpacePtr ExtCalc::ext_space(const ModulePtr& m, const ModulePtr& n, std::size_t degree) {
  auto key = std::make_tuple(m->id(), n->id(), degree);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;

  ResView res = s_->proj_res(m, degree + 1);
  ModulePtr term = res.term(degree);
  Fel p = m->algebra()->p;

  auto sp = std::make_shared<ExtSpace>();
  sp->m = m;
  sp->n = n;
  sp->degree = degree;
  sp->term = term;

  Subspace hom = hom_subspace(term, n);
  ModulePtr next = res.term(degree + 1);
  if (next->dim() == 0) {
    sp->cocycles = hom;
  } else {
    // phi . d = 0 as linear conditions on flattened phi
    FFMatrix d = res.differential(degree + 1).matrix;   // term.dim x next.dim
    std::size_t amb = n->dim() * term->dim();
    FFMatrix cond(p, n->dim() * next->dim(), amb);
    std::size_t eq = 0;
    for (std::size_t r = 0; r < n->dim(); ++r)
      for (std::size_t c = 0; c < next->dim(); ++c) {
        for (std::size_t s = 0; s < term->dim(); ++s)
          cond.set(eq, r * term->dim() + s, d.at(s, c));
        ++eq;
      }
    sp->cocycles = hom.intersect(Subspace::from_rows(cond.kernel_rows()));
  }

  if (degree == 0) {
    sp->coboundaries = Subspace(p, n->dim() * term->dim());
  } else {
    FFMatrix d = res.differential(degree).matrix;   // P_{k-1}.dim x term.dim
    auto prev_hom = hom_space(res.term(degree - 1), n);
    FFMatrix rows(p, prev_hom.size(), n->dim() * term->dim());
    for (std::size_t i = 0; i < prev_hom.size(); ++i)
      rows.set_row(i, flatten_matrix(prev_hom[i].matrix * d));
    sp->coboundaries = Subspace::from_rows(rows);
  }

  {
    FFMatrix rows(p, sp->cocycles.dim(), sp->cocycles.ambient());
    for (std::size_t i = 0; i < sp->cocycles.dim(); ++i)
      rows.set_row(i, sp->coboundaries.reduce(sp->cocycles.basis().row(i)));
    sp->quotient_reps = Subspace::from_rows(rows);
  }
  if (sp->quotient_reps.dim() != sp->cocycles.dim() - sp->coboundaries.dim())
    throw InternalCheck("ext_space: quotient dimension bookkeeping failed");

  spaces_[key] = sp;
  return sp;
}

ExtClass ExtCalc::zero_class(const ExtSpacePtr& sp) {
  return ExtClass{sp, FFMatrix(sp->cocycles.p(), sp->n->dim(), sp->term->dim())};
}

ExtClass ExtCalc::make_class(const ExtSpacePtr& sp, FFMatrix cocycle) {
  if (!sp->is_cocycle(cocycle)) throw InternalCheck("make_class: matrix is not a cocycle");
  return ExtClass{sp, std::move(cocycle)};
}

ExtClass ExtCalc::from_hom(const Morphism& f) {
  auto sp = ext_space(f.source, f.target, 0);
  ResView res = s_->proj_res(f.source, 1);
  return make_class(sp, f.matrix * res.cover(0).matrix);
}

Morphism ExtCalc::to_hom(const ExtClass& gamma) {
  if (gamma.space->degree != 0) throw InputError("to_hom: degree must be 0");
  ResView res = s_->proj_res(gamma.space->m, 1);
  // phi = f . cover, cover epi: solve cover^T f^T = phi^T
  auto ft = res.cover(0).matrix.transposed().solve_matrix(gamma.cocycle.transposed());
  if (!ft) throw InternalCheck("to_hom: cocycle does not factor through the augmentation");
  Morphism f{gamma.space->m, gamma.space->n, ft->transposed()};
  f.validate();
  return f;
}

std::vector<Morphism> ExtCalc::comparison_lift(const Morphism& f, std::size_t k) {
  ResView rm = s_->proj_res(f.source, k + 1);
  ResView rn = s_->proj_res(f.target, k + 1);
  std::vector<Morphism> lift;
  lift.push_back(lift_through_deflation(rn.cover(0), compose(f, rm.cover(0))));
  for (std::size_t i = 1; i <= k; ++i) {
    Morphism w = compose(lift[i - 1], rm.differential(i));
    Morphism v = factor_through_injection(rn.incl(i - 1), w);
    lift.push_back(lift_through_deflation(rn.cover(i), v));
  }
  return lift;
}

Morphism ExtCalc::syzygy_lift(const Morphism& f, std::size_t k) {
  if (k == 0) return f;
  auto lift = comparison_lift(f, k - 1);
  ResView rm = s_->proj_res(f.source, k);
  ResView rn = s_->proj_res(f.target, k);
  return factor_through_injection(rn.incl(k - 1), compose(lift[k - 1], rm.incl(k - 1)));
}

ExtClass ExtCalc::pullback(const ExtClass& gamma, const Morphism& f) {
  if (f.target != gamma.space->m) throw InputError("pullback: f must land in the class source");
  std::size_t k = gamma.space->degree;
  if (k == 0) return from_hom(compose(to_hom(gamma), f));
  auto lift = comparison_lift(f, k);
  auto sp = ext_space(f.source, gamma.space->n, k);
  return make_class(sp, gamma.cocycle * lift[k].matrix);
}

ExtClass ExtCalc::pushout(const Morphism& g, const ExtClass& gamma) {
  if (g.source != gamma.space->n) throw InputError("pushout: g must start at the class target");
  auto sp = ext_space(gamma.space->m, g.target, gamma.space->degree);
  return make_class(sp, g.matrix * gamma.cocycle);
}

ExtClass ExtCalc::baer_sum(const ExtClass& a, const ExtClass& b) {
  if (a.space != b.space) throw InputError("baer_sum: classes live in different Ext spaces");
  return ExtClass{a.space, a.cocycle + b.cocycle};
}

ExtClass ExtCalc::negate(const ExtClass& a) { return ExtClass{a.space, a.cocycle.negated()}; }

ExtClass ExtCalc::scale_class(Fel c, const ExtClass& a) {
  return ExtClass{a.space, a.cocycle.scaled(c % a.cocycle.p())};
}

ExtClass ExtCalc::splice(const ExtClass& gamma, const ExtClass& delta) {
  if (gamma.space->m != delta.space->n)
    throw InputError("splice: middle objects differ");
  std::size_t i = gamma.space->degree, j = delta.space->degree;
  if (i == 0) return pushout(to_hom(gamma), delta);
  if (j == 0) return pullback(gamma, to_hom(delta));

  const ModulePtr& m = delta.space->m;
  const ModulePtr& mid = gamma.space->m;
  ResView rm = s_->proj_res(m, i + j + 1);
  ResView rn = s_->proj_res(mid, i + 1);

  // lift the cocycle of delta to a chain map lambda_s : P_{j+s}(M) -> P_s(mid)
  Morphism delta_map{rm.term(j), mid, delta.cocycle};
  std::vector<Morphism> lambda;
  lambda.push_back(lift_through_deflation(rn.cover(0), delta_map));
  for (std::size_t sdeg = 1; sdeg <= i; ++sdeg) {
    Morphism w = compose(lambda[sdeg - 1], rm.differential(j + sdeg));
    Morphism v = factor_through_injection(rn.incl(sdeg - 1), w);
    lambda.push_back(lift_through_deflation(rn.cover(sdeg), v));
  }
  auto sp = ext_space(m, gamma.space->n, i + j);
  return make_class(sp, gamma.cocycle * lambda[i].matrix);
}

ExtClass ExtCalc::canonical_unit(const ModulePtr& n, std::size_t k) {
  if (k == 0) return from_hom(identity_morphism(n));
  ResView res = s_->proj_res(n, k + 1);
  auto sp = ext_space(n, res.syzygy(k), k);
  return make_class(sp, res.cover(k).matrix);
}

Morphism ExtCalc::luf(const ExtClass& gamma) {
  std::size_t k = gamma.space->degree;
  if (k == 0) return to_hom(gamma);
  ResView res = s_->proj_res(gamma.space->m, k);
  // gamma.cocycle kills ker(cover), so it factors: g . cover = cocycle
  auto gt = res.cover(k).matrix.transposed().solve_matrix(gamma.cocycle.transposed());
  if (!gt) throw InternalCheck("luf: cocycle does not factor through the cover");
  Morphism g{res.syzygy(k), gamma.space->n, gt->transposed()};
  g.validate();
  return g;
}

ExtClass ExtCalc::class_of_extension(const ModulePtr& m, const ExtensionChain& chain) {
  if (chain.empty()) throw InputError("class_of_extension: empty chain");
  std::size_t k = chain.size();
  if (chain[0].deflation.target != m)
    throw InputError("class_of_extension: chain does not end at the given module");
  for (std::size_t i = 1; i < k; ++i)
    if (chain[i].deflation.target != chain[i - 1].inflation.source)
      throw InputError("class_of_extension: chain links do not match");

  ResView res = s_->proj_res(m, k + 1);
  Morphism u = lift_through_deflation(chain[0].deflation, res.cover(0));
  for (std::size_t i = 1; i < k; ++i) {
    Morphism w = compose(u, res.differential(i));
    Morphism v = factor_through_injection(chain[i - 1].inflation, w);
    u = lift_through_deflation(chain[i].deflation, v);
  }
  Morphism phi = factor_through_injection(chain[k - 1].inflation, compose(u, res.differential(k)));
  auto sp = ext_space(m, chain[k - 1].inflation.source, k);
  return make_class(sp, phi.matrix);
}

ExtensionChain ExtCalc::extension_form(const ExtClass& gamma) {
  std::size_t k = gamma.space->degree;
  if (k == 0) throw InputError("extension_form: degree must be >= 1");
  const ModulePtr& m = gamma.space->m;
  const ModulePtr& y = gamma.space->n;
  ResView res = s_->proj_res(m, k);
  Morphism g = luf(gamma);   // omega^k -> Y

  ExtensionChain chain;
  for (std::size_t i = 0; i + 1 < k; ++i) chain.push_back(Conflation{res.incl(i), res.cover(i)});

  // pushout of (omega^k -> P_{k-1} ->> omega^{k-1}) along g
  DirectSum w = direct_sum({y, res.term(k - 1)});
  Morphism into_w = subtract(compose(w.injections[0], g), compose(w.injections[1], res.incl(k - 1)));
  auto co = cokernel(into_w);
  Morphism inflation = compose(co.projection, w.injections[0]);
  // deflation onto omega^{k-1}: induced by (0, cover_{k-1}) through the quotient
  Morphism zc = compose(res.cover(k - 1), w.projections[1]);
  auto dbar = co.projection.matrix.transposed().solve_matrix(zc.matrix.transposed());
  if (!dbar) throw InternalCheck("extension_form: pushout deflation solve failed");
  Morphism deflation{co.module, res.syzygy(k - 1), dbar->transposed()};
  deflation.validate();
  Conflation top{inflation, deflation};
  top.validate();
  chain.push_back(top);

  // re-extraction must reproduce the coset
  ExtClass back = class_of_extension(m, chain);
  if (back.coset() != gamma.coset())
    throw InternalCheck("extension_form: re-extracted class differs from the input class");
  return chain;
}

Conflation ExtCalc::dual_conflation(const Conflation& c) {
  return Conflation{s_->dual(c.deflation), s_->dual(c.inflation)};
}

ExtClass ExtCalc::dual_class(const ExtClass& gamma) {
  std::size_t k = gamma.space->degree;
  if (k == 0) return from_hom(s_->dual(to_hom(gamma)));
  ExtensionChain chain = extension_form(gamma);
  ExtensionChain dual_chain;
  for (std::size_t i = 0; i < k; ++i) dual_chain.push_back(dual_conflation(chain[k - 1 - i]));
  return class_of_extension(s_->dual(gamma.space->n), dual_chain);
}

ExtCalc::UpUnit ExtCalc::canonical_up_unit(const ModulePtr& y, std::size_t k) {
  auto key = std::make_pair(y->id(), k);
  auto it = up_units_.find(key);
  if (it != up_units_.end()) return it->second;

  UpUnit out;
  out.start = y;
  if (k == 0) {
    out.end = y;
    out.cls = from_hom(identity_morphism(y));
  } else {
    ModulePtr dy = s_->dual(y);
    ResView res = s_->proj_res(dy, k);
    ExtensionChain op_chain;
    for (std::size_t i = 0; i < k; ++i) op_chain.push_back(Conflation{res.incl(i), res.cover(i)});
    ExtensionChain up_chain;
    for (std::size_t i = 0; i < k; ++i) up_chain.push_back(dual_conflation(op_chain[k - 1 - i]));
    out.end = s_->dual(res.syzygy(k));
    out.chain = up_chain;
    out.cls = class_of_extension(out.end, up_chain);
  }
  up_units_[key] = out;
  return out;
}

ModulePtr ExtCalc::cosyzygy(const ModulePtr& y, std::size_t k) {
  if (k == 0) return y;
  return s_->dual(s_->syzygy(s_->dual(y), k));
}

ExtCalc::Ruf ExtCalc::ruf(const ExtClass& gamma) {
  std::size_t k = gamma.space->degree;
  if (k == 0) {
    Ruf out{canonical_up_unit(gamma.space->n, 0), to_hom(gamma)};
    return out;
  }
  UpUnit up = canonical_up_unit(gamma.space->n, k);
  ExtClass gd = dual_class(gamma);
  Morphism g = luf(gd);                  // omega^k_op(DY) -> D(M)
  Morphism f = s_->dual(g);              // M -> end(up)
  if (f.source != gamma.space->m || f.target != up.end)
    throw InternalCheck("ruf: dualized factorization has wrong endpoints");
  ExtClass check = pullback(up.cls, f);
  if (check.coset() != gamma.coset())
    throw InternalCheck("ruf: re-extraction does not reproduce the class");
  return Ruf{up, f};
}

}  // namespace phantomlab
