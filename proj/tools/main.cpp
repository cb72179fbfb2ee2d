// phantomlab: command-line front end. Loads algebras, modules and contexts
// from JSON, runs the homological computations and the named verification
// suites, and emits deterministic JSON (default) or text reports.
//
// Exit codes: 0 success/verified, 1 mathematical refutation (a failed
// property suite or a broken internal check), 2 input error.

#include <cstdlib>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "phantomlab/errors.hpp"
#include "phantomlab/io.hpp"
#include "phantomlab/verify.hpp"

using namespace phantomlab;

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  bool paranoid = false;
};

void emit(const Options& opt, const Json& j) {
  if (opt.format == "text") {
    std::function<void(const Json&, int)> walk = [&](const Json& v, int indent) {
      std::string pad(indent, ' ');
      if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
          if (it.value().is_object() || it.value().is_array()) {
            std::cout << pad << it.key() << ":\n";
            walk(it.value(), indent + 2);
          } else {
            std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
          }
        }
      } else if (v.is_array()) {
        for (const auto& e : v) {
          if (e.is_object() || e.is_array()) {
            std::cout << pad << "-\n";
            walk(e, indent + 2);
          } else {
            std::cout << pad << "- " << e.dump() << "\n";
          }
        }
      } else {
        std::cout << pad << v.dump() << "\n";
      }
    };
    walk(j, 0);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Json verdict_json(Answer a, const std::string& detail) {
  Json v;
  v["answer"] = to_string(a);
  v["detail"] = detail;
  return v;
}

Json stable_json(const StableMorphism& x) {
  Json j;
  j["M"] = x.space->m->name();
  j["N"] = x.space->n->name();
  j["coords"] = x.coords;
  j["zero"] = x.is_zero_stable();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phantomlab: phantom stable categories of n-Frobenius module categories"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_flag("--paranoid", opt.paranoid, "recompute compositions with independent choices");

  std::string ctx_path, m_path, n_path, f_path, g_path, file_path, bundle_path, e_path;
  std::size_t degree = 1, length = 3;
  std::string suite = "all";

  auto* alg_cmd = app.add_subcommand("algebra", "algebra file operations");
  auto* alg_check = alg_cmd->add_subcommand("check", "validate an algebra file");
  alg_check->add_option("--file", file_path, "algebra JSON")->required();

  auto* mod_cmd = app.add_subcommand("module", "module file operations");
  auto* mod_check = mod_cmd->add_subcommand("check", "validate a module file");
  mod_check->add_option("--file", file_path, "module JSON")->required();

  auto* hom_cmd = app.add_subcommand("hom", "basis of Hom(M, N)");
  hom_cmd->add_option("--M", m_path)->required();
  hom_cmd->add_option("--N", n_path)->required();

  auto* ext_cmd = app.add_subcommand("ext", "dimension and basis of Ext^deg(M, N)");
  ext_cmd->add_option("--ctx", ctx_path)->required();
  ext_cmd->add_option("--M", m_path)->required();
  ext_cmd->add_option("--N", n_path)->required();
  ext_cmd->add_option("--deg", degree);

  auto* res_cmd = app.add_subcommand("resolve", "minimal projective resolution");
  res_cmd->add_option("--ctx", ctx_path)->required();
  res_cmd->add_option("--M", m_path)->required();
  res_cmd->add_option("--len", length);

  auto* nproj_cmd = app.add_subcommand("nproj", "n-projective / n-injective verdicts");
  nproj_cmd->add_option("--ctx", ctx_path)->required();
  nproj_cmd->add_option("--M", m_path)->required();

  auto* ph_cmd = app.add_subcommand("phantom", "n-Ext-phantom verdict for a morphism");
  ph_cmd->add_option("--ctx", ctx_path)->required();
  ph_cmd->add_option("--f", f_path)->required();

  auto* inv_cmd = app.add_subcommand("invertible", "n-Ext-invertible verdict for a morphism");
  inv_cmd->add_option("--ctx", ctx_path)->required();
  inv_cmd->add_option("--f", f_path)->required();

  auto* psub_cmd = app.add_subcommand("p-subspace", "the p-subgroup of Ext^n(M, N)");
  psub_cmd->add_option("--ctx", ctx_path)->required();
  psub_cmd->add_option("--M", m_path)->required();
  psub_cmd->add_option("--N", n_path)->required();

  auto* sh_cmd = app.add_subcommand("stablehom", "the stable hom-space of C_p");
  sh_cmd->add_option("--ctx", ctx_path)->required();
  sh_cmd->add_option("--M", m_path)->required();
  sh_cmd->add_option("--N", n_path)->required();

  auto* comp_cmd =
      app.add_subcommand("compose", "compose T(f) after T(g) and compare with T(f o g)");
  comp_cmd->add_option("--ctx", ctx_path)->required();
  comp_cmd->add_option("--f", f_path, "outer morphism file")->required();
  comp_cmd->add_option("--g", g_path, "inner morphism file")->required();

  auto* t_cmd = app.add_subcommand("T", "image of a morphism under the functor T");
  t_cmd->add_option("--ctx", ctx_path)->required();
  t_cmd->add_option("--f", f_path)->required();

  auto* syz_cmd = app.add_subcommand("syz", "syzygy of a module, or omega(f) for a morphism");
  syz_cmd->add_option("--ctx", ctx_path)->required();
  syz_cmd->add_option("--M", m_path);
  syz_cmd->add_option("--f", f_path);

  auto* cosyz_cmd = app.add_subcommand("cosyz", "cosyzygy and the density comparison");
  cosyz_cmd->add_option("--ctx", ctx_path)->required();
  cosyz_cmd->add_option("--M", m_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("--ctx", ctx_path, "context file (defaults to the shipped instances)");
  verify_cmd->add_option("--suite", suite, "stable0 | composition | syzygy | p1 | all")
      ->check(CLI::IsMember({"stable0", "composition", "syzygy", "p1", "all"}));

  auto* p1_cmd = app.add_subcommand("p1", "coherent sheaves on the projective line");
  auto* p1_split = p1_cmd->add_subcommand("split", "Birkhoff splitting of a bundle");
  p1_split->add_option("--bundle", bundle_path)->required();
  auto* p1_hom = p1_cmd->add_subcommand("hom", "Hom between bundles");
  p1_hom->add_option("--E", e_path)->required();
  p1_hom->add_option("--F", f_path)->required();
  auto* p1_ext = p1_cmd->add_subcommand("ext", "Ext^1 between bundles");
  p1_ext->add_option("--E", e_path)->required();
  p1_ext->add_option("--F", f_path)->required();
  auto* p1_embed = p1_cmd->add_subcommand("embed", "cogenerator embedding of a bundle");
  p1_embed->add_option("--bundle", bundle_path)->required();
  auto* p1_verify = p1_cmd->add_subcommand("verify", "the projective-line battery");

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("PHANTOMLAB_SEED")) opt.seed = std::strtoull(env, nullptr, 10);

  IoCache cache;
  ContextOverrides over;
  over.seed = opt.seed;
  over.paranoid = opt.paranoid;

  try {
    if (*alg_check) {
      AlgebraPtr a = load_algebra(file_path, cache);
      Json j;
      j["file"] = file_path;
      j["ok"] = true;
      j["p"] = a->p;
      j["dim"] = a->dim;
      j["basis"] = a->basis_labels;
      j["idempotents"] = a->idempotents.size();
      emit(opt, j);
    } else if (*mod_check) {
      ModulePtr m = load_module(file_path, cache);
      Json j;
      j["file"] = file_path;
      j["ok"] = true;
      j["name"] = m->name();
      j["dim"] = m->dim();
      emit(opt, j);
    } else if (*hom_cmd) {
      ModulePtr m = load_module(m_path, cache);
      ModulePtr n = load_module(n_path, cache);
      auto basis = hom_space(m, n);
      Json j;
      j["M"] = m->name();
      j["N"] = n->name();
      j["dim"] = basis.size();
      Json mats = Json::array();
      for (const auto& h : basis) mats.push_back(matrix_to_json(h.matrix));
      j["basis"] = std::move(mats);
      emit(opt, j);
    } else if (*ext_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      ModulePtr m = load_module(m_path, cache);
      ModulePtr n = load_module(n_path, cache);
      auto sp = inst.frob->ext().ext_space(m, n, degree);
      Json j;
      j["M"] = m->name();
      j["N"] = n->name();
      j["deg"] = degree;
      j["dim"] = sp->dim();
      Json basis = Json::array();
      for (std::size_t i = 0; i < sp->dim(); ++i) {
        std::vector<Fel> unit(sp->dim(), 0);
        unit[i] = 1;
        basis.push_back(matrix_to_json(sp->cocycle_from_coset(unit)));
      }
      j["basis_cocycles"] = std::move(basis);
      emit(opt, j);
    } else if (*res_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      ModulePtr m = load_module(m_path, cache);
      ResView res = inst.session->proj_res(m, length);
      Json j;
      j["M"] = m->name();
      j["length"] = length;
      Json terms = Json::array(), syz = Json::array();
      for (std::size_t k = 0; k <= length; ++k) {
        terms.push_back(res.term(k)->dim());
        syz.push_back(res.syzygy(k)->dim());
      }
      j["term_dims"] = std::move(terms);
      j["syzygy_dims"] = std::move(syz);
      emit(opt, j);
    } else if (*nproj_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      ModulePtr m = load_module(m_path, cache);
      Json j;
      j["M"] = m->name();
      j["n"] = inst.frob->ctx().n;
      j["n_projective"] = to_string(inst.frob->is_n_projective(m));
      j["n_injective"] = to_string(inst.frob->is_n_injective(m));
      emit(opt, j);
    } else if (*ph_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      Morphism f = load_morphism(f_path, cache);
      PhantomVerdict v = inst.frob->is_phantom(f);
      Json j;
      j["f"] = f_path;
      Json verdicts = Json::array();
      Json entry = verdict_json(v.answer, v.detail);
      if (v.witness) entry["witness"] = (*v.witness)->name();
      if (v.certificate) entry["certificate_coefficients"] = v.certificate->coefficients;
      verdicts.push_back(std::move(entry));
      j["verdicts"] = std::move(verdicts);
      emit(opt, j);
    } else if (*inv_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      Morphism f = load_morphism(f_path, cache);
      std::string why;
      Answer a = inst.frob->is_invertible(f, &why);
      Json j;
      j["f"] = f_path;
      Json verdicts = Json::array();
      verdicts.push_back(verdict_json(a, why));
      j["verdicts"] = std::move(verdicts);
      emit(opt, j);
    } else if (*psub_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      ModulePtr m = load_module(m_path, cache);
      ModulePtr n = load_module(n_path, cache);
      PSubspace pull = inst.frob->p_subspace(m, n);
      PSubspace push = inst.frob->p_subspace_pushout(m, n);
      Json j;
      j["M"] = m->name();
      j["N"] = n->name();
      j["ext_dim"] = pull.space->dim();
      j["p_dim"] = pull.sub.dim();
      j["registry_complete"] = pull.complete;
      j["pullback_equals_pushout"] = (pull.sub == push.sub);
      emit(opt, j);
    } else if (*sh_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      ModulePtr m = load_module(m_path, cache);
      ModulePtr n = load_module(n_path, cache);
      auto hom = inst.stable->stable_hom(m, n);
      Json j;
      Json h;
      h["M"] = m->name();
      h["N"] = n->name();
      h["n"] = inst.frob->ctx().n;
      h["ext_dim"] = hom->ext->dim();
      h["p_dim"] = hom->psub.sub.dim();
      h["dim"] = hom->dim();
      Json basis = Json::array();
      for (std::size_t i = 0; i < hom->dim(); ++i) {
        std::vector<Fel> unit(hom->dim(), 0);
        unit[i] = 1;
        basis.push_back(matrix_to_json(hom->representative(unit).cocycle));
      }
      h["basis_cocycles"] = std::move(basis);
      j["hom"] = std::move(h);
      emit(opt, j);
    } else if (*comp_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      Morphism f = load_morphism(f_path, cache);
      Morphism g = load_morphism(g_path, cache);
      StableMorphism composed =
          inst.stable->compose_stable(inst.stable->functor_T(f), inst.stable->functor_T(g));
      StableMorphism direct = inst.stable->functor_T(compose(f, g));
      Json j;
      j["composite"] = stable_json(composed);
      j["direct"] = stable_json(direct);
      j["agree"] = (composed.coords == direct.coords);
      emit(opt, j);
      return composed.coords == direct.coords ? 0 : 1;
    } else if (*t_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      Morphism f = load_morphism(f_path, cache);
      Json j;
      j["T"] = stable_json(inst.stable->functor_T(f));
      emit(opt, j);
    } else if (*syz_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      Json j;
      if (!f_path.empty()) {
        Morphism f = load_morphism(f_path, cache);
        j["omega"] = stable_json(inst.stable->omega_morphism(f));
      } else if (!m_path.empty()) {
        ModulePtr m = load_module(m_path, cache);
        ModulePtr om = inst.stable->syz_object(m);
        j["M"] = m->name();
        j["syzygy_dim"] = om->dim();
      } else {
        throw InputError("syz: provide --M or --f");
      }
      emit(opt, j);
    } else if (*cosyz_cmd) {
      Instance inst = load_context(ctx_path, cache, over);
      ModulePtr m = load_module(m_path, cache);
      ModulePtr cs = inst.stable->cosyz_object(m);
      bool density = inst.stable->is_iso_stable(inst.stable->density_comparison(m));
      Json j;
      j["M"] = m->name();
      j["cosyzygy_dim"] = cs->dim();
      j["density_comparison_iso"] = density;
      emit(opt, j);
      return density ? 0 : 1;
    } else if (*verify_cmd) {
      std::vector<SuiteReport> reports;
      std::optional<Instance> loaded;
      if (!ctx_path.empty()) loaded = load_context(ctx_path, cache, over);
      auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
      if (want("stable0")) {
        if (loaded && loaded->frob->ctx().n == 0) {
          reports.push_back(suite_stable0(*loaded, opt.seed));
          loaded.reset();
        } else {
          Instance inst0 = make_instance_lambda0(opt.seed, opt.paranoid);
          reports.push_back(suite_stable0(inst0, opt.seed));
        }
      }
      if (want("composition") || want("syzygy")) {
        Instance inst =
            loaded ? std::move(*loaded) : make_instance_lambda1(1, opt.seed, opt.paranoid);
        if (want("composition")) reports.push_back(suite_composition(inst, opt.seed));
        if (want("syzygy")) reports.push_back(suite_syzygy(inst, opt.seed));
      }
      if (want("p1")) reports.push_back(suite_p1(opt.seed));

      bool pass = true;
      Json j;
      j["seed"] = opt.seed;
      Json arr = Json::array();
      for (const auto& r : reports) {
        pass = pass && r.pass;
        arr.push_back(report_to_json(r));
      }
      j["pass"] = pass;
      j["suites"] = std::move(arr);
      emit(opt, j);
      return pass ? 0 : 1;
    } else if (*p1_split) {
      CoherentRep rep = load_bundle(bundle_path);
      auto b = birkhoff_split(rep);
      Json j;
      j["bundle"] = bundle_path;
      j["type"] = b.type.twists;
      j["u"] = laurent_matrix_to_json(b.u);
      j["l"] = laurent_matrix_to_json(b.l);
      emit(opt, j);
    } else if (*p1_hom) {
      CoherentRep e = load_bundle(e_path);
      CoherentRep f = load_bundle(f_path);
      auto h = hom_sheaves(e, f);
      Json j;
      j["dim"] = h.dim;
      Json basis = Json::array();
      for (const auto& [plus, minus] : h.basis) {
        Json pair;
        pair["plus"] = laurent_matrix_to_json(plus);
        pair["minus"] = laurent_matrix_to_json(minus);
        basis.push_back(std::move(pair));
      }
      j["basis"] = std::move(basis);
      emit(opt, j);
    } else if (*p1_ext) {
      CoherentRep e = load_bundle(e_path);
      CoherentRep f = load_bundle(f_path);
      auto x = ext1_sheaves(e, f);
      Json j;
      j["dim"] = x.dim;
      Json basis = Json::array();
      for (const auto& w : x.cocycles) basis.push_back(laurent_matrix_to_json(w));
      j["cocycles"] = std::move(basis);
      emit(opt, j);
    } else if (*p1_embed) {
      CoherentRep rep = load_bundle(bundle_path);
      auto emb = cogenerator_embed(rep);
      Json j;
      j["bundle"] = bundle_path;
      j["single_block"] = emb.single_block;
      j["target_twists"] = emb.target_twists;
      j["stacked_plus"] = laurent_matrix_to_json(emb.stacked_plus);
      j["stacked_minus"] = laurent_matrix_to_json(emb.stacked_minus);
      emit(opt, j);
    } else if (*p1_verify) {
      SuiteReport r = suite_p1(opt.seed);
      emit(opt, report_to_json(r));
      return r.pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    Json j;
    j["error"] = e.what();
    emit(opt, j);
    return 2;
  } catch (const UnsupportedContext& e) {
    Json j;
    j["error"] = e.what();
    emit(opt, j);
    return 2;
  } catch (const Error& e) {
    Json j;
    j["error"] = e.what();
    emit(opt, j);
    return 1;
  }
  return 0;
}
