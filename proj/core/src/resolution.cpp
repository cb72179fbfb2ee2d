#include "phantomlab/resolution.hpp"

#include "phantomlab/errors.hpp"

namespace phantomlab {

struct ResView::Data {
  ModulePtr base;
  std::vector<ModulePtr> terms;     // P_k
  std::vector<ModulePtr> syz;      // syz[k] = omega^k, syz[0] = base
  std::vector<Morphism> covers;    // covers[k]: P_k ->> omega^k
  std::vector<Morphism> incls;     // incls[k]: omega^(k+1) -> P_k
};

ModulePtr ResView::base() const { return data_->syz[offset_]; }

ModulePtr ResView::term(std::size_t k) const { return data_->terms[offset_ + k]; }

ModulePtr ResView::syzygy(std::size_t k) const { return data_->syz[offset_ + k]; }

Morphism ResView::cover(std::size_t k) const { return data_->covers[offset_ + k]; }

Morphism ResView::incl(std::size_t k) const { return data_->incls[offset_ + k]; }

Morphism ResView::differential(std::size_t k) const {
  if (k == 0) throw InputError("differential index must be >= 1");
  return compose(incl(k - 1), cover(k));
}

Session::Session(AlgebraPtr alg) : alg_(std::move(alg)) {
  op_ = std::make_shared<const Algebra>(alg_->opposite());
  zero_alg_ = zero_module(alg_);
  zero_op_ = zero_module(op_);
}

ModulePtr Session::zero(AlgebraPtr which) { return which == alg_ ? zero_alg_ : zero_op_; }

ModulePtr Session::dual(const ModulePtr& m) {
  auto it = dual_.find(m->id());
  if (it != dual_.end()) return it->second;
  AlgebraPtr other = (m->algebra() == alg_) ? op_ : alg_;
  ModulePtr d = dual_module(m, other);
  dual_[m->id()] = d;
  dual_[d->id()] = m;   // involution on handles
  return d;
}

Morphism Session::dual(const Morphism& f) {
  return Morphism{dual(f.target), dual(f.source), f.matrix.transposed()};
}

ResView Session::proj_res(const ModulePtr& m, std::size_t length) {
  auto it = res_.find(m->id());
  if (it == res_.end()) {
    ResView view;
    view.data_ = std::make_shared<ResView::Data>();
    view.data_->base = m;
    view.data_->syz.push_back(m);
    view.offset_ = 0;
    res_[m->id()] = view;
    it = res_.find(m->id());
  }
  extend(it->second, length);
  return it->second;
}

void Session::extend(ResView& view, std::size_t length) {
  auto& d = *view.data_;
  while (d.terms.size() < view.offset_ + length + 1) {
    std::size_t k = d.terms.size();
    Conflation c = projective_cover(d.syz[k]);
    d.terms.push_back(c.deflation.source);
    d.covers.push_back(c.deflation);
    d.incls.push_back(c.inflation);
    ModulePtr next = c.inflation.source;
    d.syz.push_back(next);
    // the syzygy's own resolution is this one, shifted
    if (!res_.count(next->id())) {
      ResView shifted;
      shifted.data_ = view.data_;
      shifted.offset_ = k + 1;
      res_[next->id()] = shifted;
    }
  }
}

ModulePtr Session::syzygy(const ModulePtr& m, std::size_t k) {
  if (k == 0) return m;
  return proj_res(m, k).syzygy(k);
}

std::optional<std::size_t> Session::projective_dimension(const ModulePtr& m, std::size_t limit) {
  if (m->is_zero()) return 0;
  for (std::size_t k = 0; k <= limit; ++k)
    if (syzygy(m, k + 1)->is_zero()) return k;
  return std::nullopt;
}

}  // namespace phantomlab
