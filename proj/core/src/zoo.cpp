#include "phantomlab/module.hpp"

namespace phantomlab {

namespace {

void consider(std::vector<ModulePtr>& zoo, const ModulePtr& cand, std::size_t dim_bound,
              std::uint64_t seed) {
  if (cand->is_zero() || cand->dim() > dim_bound) return;
  for (const auto& kept : zoo)
    if (iso_test(kept, cand, seed).verdict == IsoVerdict::Isomorphic) return;
  zoo.push_back(cand);
}

}  // namespace

std::vector<ModulePtr> module_zoo(AlgebraPtr alg, AlgebraPtr op, std::size_t dim_bound,
                                  std::uint64_t seed) {
  std::vector<ModulePtr> zoo;
  if (dim_bound == 0) return zoo;
  Rng rng(seed);

  std::vector<ModulePtr> roots;
  for (std::size_t i = 0; i < alg->n_idempotents(); ++i) {
    ModulePtr s = simple_module(alg, i);
    ModulePtr proj = projective_module(alg, i);
    ModulePtr inj = dual_module(projective_module(op, i), alg);
    consider(zoo, s, dim_bound, seed);
    consider(zoo, proj, dim_bound, seed);
    consider(zoo, inj, dim_bound, seed);
    roots.push_back(s);
    roots.push_back(proj);
    roots.push_back(inj);
  }

  // syzygies and cosyzygies of the roots, a few steps deep
  for (const auto& r : roots) {
    ModulePtr cur = r;
    for (int step = 0; step < 3 && !cur->is_zero(); ++step) {
      cur = projective_cover(cur).inflation.source;
      consider(zoo, cur, dim_bound, seed);
    }
    cur = r;
    for (int step = 0; step < 3 && !cur->is_zero(); ++step) {
      cur = injective_hull(cur, op).deflation.target;
      consider(zoo, cur, dim_bound, seed);
    }
  }

  // cyclic submodules and quotients of pairs of projectives
  Fel p = alg->p;
  std::size_t counter = 0;
  for (std::size_t i = 0; i < alg->n_idempotents(); ++i)
    for (std::size_t j = i; j < alg->n_idempotents(); ++j) {
      DirectSum pq = direct_sum({projective_module(alg, i), projective_module(alg, j)});
      std::size_t d = pq.module->dim();
      if (d > 8) continue;
      double count = 1;
      for (std::size_t t = 0; t < d && count <= 256; ++t) count *= p;
      std::vector<std::vector<Fel>> vectors;
      if (count <= 256) {
        std::vector<Fel> v(d, 0);
        for (;;) {
          std::size_t t = 0;
          while (t < d && v[t] == p - 1) v[t++] = 0;
          if (t == d) break;
          ++v[t];
          vectors.push_back(v);
        }
      } else {
        for (int t = 0; t < 40; ++t) {
          std::vector<Fel> v(d, 0);
          for (std::size_t s = 0; s < d; ++s) v[s] = (Fel)rng.below(p);
          if (!is_zero_vector(v)) vectors.push_back(v);
        }
      }
      for (const auto& v : vectors) {
        FFMatrix row(p, 1, d);
        row.set_row(0, v);
        auto sub = submodule_spanned(pq.module, row, "Z" + std::to_string(++counter));
        consider(zoo, sub.module, dim_bound, seed);
        Subspace span = Subspace::from_rows(sub.inclusion.matrix.transposed());
        auto quo = quotient_module(pq.module, span, "Q" + std::to_string(counter));
        consider(zoo, quo.module, dim_bound, seed);
      }
    }

  // seeded extras: quotients of triple sums by two-generator submodules
  if (alg->n_idempotents() >= 1) {
    for (int t = 0; t < 6; ++t) {
      std::vector<ModulePtr> parts;
      for (int s = 0; s < 3; ++s)
        parts.push_back(projective_module(alg, rng.below(alg->n_idempotents())));
      DirectSum sum = direct_sum(parts);
      std::size_t d = sum.module->dim();
      FFMatrix rows(p, 2, d);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < d; ++c) rows.set(r, c, (Fel)rng.below(p));
      auto sub = submodule_spanned(sum.module, rows, "Z" + std::to_string(++counter));
      Subspace span = Subspace::from_rows(sub.inclusion.matrix.transposed());
      auto quo = quotient_module(sum.module, span, "Q" + std::to_string(counter));
      consider(zoo, quo.module, dim_bound, seed);
    }
  }

  return zoo;
}

}  // namespace phantomlab
