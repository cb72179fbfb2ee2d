// Writes the shipped instance files (algebras, modules, contexts, bundles,
// sample morphisms) into a target directory. The committed instances/ tree
// is the output of this tool.

#include <filesystem>
#include <iostream>

#include "phantomlab/instances.hpp"
#include "phantomlab/io.hpp"

using namespace phantomlab;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "instances";
  namespace fs = std::filesystem;
  fs::create_directories(dir + "/lambda0");
  fs::create_directories(dir + "/lambda1");
  fs::create_directories(dir + "/bundles");

  {
    Instance inst = make_instance_lambda0();
    write_json(dir + "/lambda0/algebra.json", algebra_to_json(*inst.algebra));
    for (const auto& [name, mod] : inst.named)
      write_json(dir + "/lambda0/" + name + ".json", module_to_json(*mod, "algebra.json"));
    Json ctx;
    ctx["algebra"] = "algebra.json";
    ctx["n"] = 0;
    ctx["registry"] = Json::array({"A.json"});
    ctx["registry_complete"] = true;
    ctx["gorenstein_mode"] = true;
    ctx["zoo_dim_bound"] = 3;
    ctx["seed"] = 1;
    write_json(dir + "/lambda0/ctx.json", ctx);
    // sample morphism: the socle inclusion k -> A
    ModulePtr k = inst.named.at("k");
    ModulePtr a = inst.named.at("A");
    auto homs = hom_space(k, a);
    write_json(dir + "/lambda0/socle.morphism.json",
               morphism_to_json(homs.at(0), "k.json", "A.json"));
    auto ends = hom_space(k, k);
    write_json(dir + "/lambda0/idk.morphism.json",
               morphism_to_json(identity_morphism(k), "k.json", "k.json"));
  }

  {
    Instance inst = make_instance_lambda1();
    write_json(dir + "/lambda1/algebra.json", algebra_to_json(*inst.algebra));
    for (const auto& [name, mod] : inst.named)
      write_json(dir + "/lambda1/" + name + ".json", module_to_json(*mod, "algebra.json"));
    for (std::size_t n : {1, 2}) {
      Json ctx;
      ctx["algebra"] = "algebra.json";
      ctx["n"] = n;
      ctx["registry"] = Json::array({"P1.json", "P2.json", "L1.json"});
      ctx["registry_complete"] = true;
      ctx["gorenstein_mode"] = true;
      ctx["zoo_dim_bound"] = 4;
      ctx["seed"] = 1;
      write_json(dir + "/lambda1/ctx.n" + std::to_string(n) + ".json", ctx);
    }
    // sample morphisms: the socle embedding S2 -> P2 and a P2 -> P1 embedding
    ModulePtr s2 = inst.named.at("S2");
    ModulePtr p2 = inst.named.at("P2");
    ModulePtr p1 = inst.named.at("P1");
    write_json(dir + "/lambda1/s2_into_p2.morphism.json",
               morphism_to_json(hom_space(s2, p2).at(0), "S2.json", "P2.json"));
    for (const auto& h : hom_space(p2, p1))
      if (h.is_injective()) {
        write_json(dir + "/lambda1/p2_into_p1.morphism.json",
                   morphism_to_json(h, "P2.json", "P1.json"));
        break;
      }
  }

  {
    write_json(dir + "/bundles/twist2_twistm1.json",
               bundle_to_json(CoherentRep::twist_sum(2, {2, -1})));
    CoherentRep shear;
    shear.rank = 2;
    shear.gluing = LaurentMatrix(2, 2, 2);
    shear.gluing.at(0, 0) = LaurentPoly::monomial(2, -1);
    shear.gluing.at(0, 1) = LaurentPoly::constant(2, 1);
    shear.gluing.at(1, 1) = LaurentPoly::monomial(2, 1);
    write_json(dir + "/bundles/nonsplit00.json", bundle_to_json(shear));
    write_json(dir + "/bundles/twist0.json", bundle_to_json(CoherentRep::twist(2, 0)));
    write_json(dir + "/bundles/twist0_gf5.json", bundle_to_json(CoherentRep::twist(5, 0)));
  }

  std::cout << "wrote instance files under " << dir << "\n";
  return 0;
}
