#include "phantomlab/instances.hpp"

#include "phantomlab/errors.hpp"

namespace phantomlab {

Instance make_instance_lambda0(std::uint64_t seed, bool paranoid) {
  Instance inst;
  inst.algebra = std::make_shared<const Algebra>(make_lambda0());
  inst.session = std::make_shared<Session>(inst.algebra);

  ModulePtr k = simple_module(inst.algebra, 0);
  ModulePtr reg = regular_module(inst.algebra);
  inst.named["k"] = k;
  inst.named["A"] = reg;

  FrobeniusContext ctx;
  ctx.algebra = inst.algebra;
  ctx.n = 0;
  ctx.registry = {reg};
  ctx.registry_complete = true;   // the only indecomposable projective
  ctx.gorenstein_mode = true;     // self-injective
  ctx.zoo_dim_bound = 3;
  ctx.seed = seed;
  ctx.paranoid = paranoid;
  ctx.test_family = module_zoo(inst.algebra, inst.session->opposite(), ctx.zoo_dim_bound, seed);

  inst.frob = std::make_shared<NFrob>(ctx, inst.session);
  inst.stable = std::make_shared<StableCat>(inst.frob);
  return inst;
}

Instance make_instance_lambda1(std::size_t n, std::uint64_t seed, bool paranoid) {
  if (n < 1 || n > 2) throw InputError("lambda1 instance: n must be 1 or 2");
  Instance inst;
  inst.algebra = std::make_shared<const Algebra>(make_lambda1());
  inst.session = std::make_shared<Session>(inst.algebra);

  ModulePtr p1 = projective_module(inst.algebra, 0);
  ModulePtr p2 = projective_module(inst.algebra, 1);
  ModulePtr s1 = simple_module(inst.algebra, 0);
  ModulePtr s2 = simple_module(inst.algebra, 1);
  // L1 = coker(P2 -> P1) along the arrow generator: the unique non-projective
  // indecomposable of finite projective dimension
  ModulePtr l1;
  {
    auto homs = hom_space(p2, p1);
    Morphism emb = zero_morphism(p2, p1);
    for (const auto& h : homs)
      if (h.is_injective()) { emb = h; break; }
    if (emb.is_zero()) throw InternalCheck("lambda1 instance: no embedding P2 -> P1 found");
    l1 = cokernel(emb).module;
  }
  inst.named["P1"] = p1;
  inst.named["P2"] = p2;
  inst.named["S1"] = s1;
  inst.named["S2"] = s2;
  inst.named["L1"] = l1;

  FrobeniusContext ctx;
  ctx.algebra = inst.algebra;
  ctx.n = n;
  ctx.registry = {p1, p2, l1};
  // complete: an indecomposable of finite pd is projective or the cokernel of
  // an embedding P2 -> P1, and all such cokernels are isomorphic to L1
  ctx.registry_complete = true;
  ctx.gorenstein_mode = true;     // injdim = 1 on both sides, verified at construction
  ctx.zoo_dim_bound = 4;
  ctx.seed = seed;
  ctx.paranoid = paranoid;
  ctx.test_family = module_zoo(inst.algebra, inst.session->opposite(), ctx.zoo_dim_bound, seed);

  inst.frob = std::make_shared<NFrob>(ctx, inst.session);
  inst.stable = std::make_shared<StableCat>(inst.frob);
  return inst;
}

}  // namespace phantomlab
