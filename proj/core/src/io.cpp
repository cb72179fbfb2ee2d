#include "phantomlab/io.hpp"

#include <filesystem>
#include <fstream>

#include "phantomlab/errors.hpp"

namespace phantomlab {

namespace {

namespace fs = std::filesystem;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& where, const std::string& what) {
  throw InputError(path + ": at " + where + ": " + what);
}

Fel get_residue(const Json& j, Fel p, const std::string& path, const std::string& where) {
  if (!j.is_number_integer()) fail(path, where, "expected an integer residue");
  long long v = j.get<long long>();
  if (v < 0 || v >= (long long)p)
    fail(path, where, "residue " + std::to_string(v) + " outside [0, " + std::to_string(p) + ")");
  return (Fel)v;
}

std::vector<Fel> get_vector(const Json& j, Fel p, std::size_t len, const std::string& path,
                            const std::string& where) {
  if (!j.is_array() || j.size() != len)
    fail(path, where, "expected an array of length " + std::to_string(len));
  std::vector<Fel> out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(get_residue(j[i], p, path, where + "[" + std::to_string(i) + "]"));
  return out;
}

FFMatrix get_matrix(const Json& j, Fel p, std::size_t rows, std::size_t cols,
                    const std::string& path, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    fail(path, where, "expected " + std::to_string(rows) + " rows");
  FFMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = get_vector(j[r], p, cols, path, where + "[" + std::to_string(r) + "]");
    m.set_row(r, row);
  }
  return m;
}

std::string resolve_relative(const std::string& base_file, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return p.lexically_normal().string();
  return (fs::path(base_file).parent_path() / p).lexically_normal().string();
}

}  // namespace

AlgebraPtr load_algebra(const std::string& path, IoCache& cache) {
  std::string key = fs::path(path).lexically_normal().string();
  auto it = cache.algebras.find(key);
  if (it != cache.algebras.end()) return it->second;

  Json j = read_json(path);
  Algebra a;
  if (!j.contains("p")) fail(path, "/p", "missing field");
  long long p = j["p"].get<long long>();
  if (p < 2 || !is_prime((Fel)p)) fail(path, "/p", "characteristic must be prime");
  a.p = (Fel)p;
  if (!j.contains("basis") || !j["basis"].is_array()) fail(path, "/basis", "missing label list");
  for (const auto& lab : j["basis"]) a.basis_labels.push_back(lab.get<std::string>());
  a.dim = a.basis_labels.size();
  if (!j.contains("mult") || !j["mult"].is_array() || j["mult"].size() != a.dim)
    fail(path, "/mult", "expected a dim x dim x dim tensor");
  for (std::size_t i = 0; i < a.dim; ++i) {
    const auto& row = j["mult"][i];
    if (!row.is_array() || row.size() != a.dim)
      fail(path, "/mult[" + std::to_string(i) + "]", "expected dim entries");
    std::vector<std::vector<Fel>> mrow;
    for (std::size_t k = 0; k < a.dim; ++k)
      mrow.push_back(get_vector(row[k], a.p, a.dim, path,
                                "/mult[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    a.mult.push_back(std::move(mrow));
  }
  a.unit = get_vector(j.value("unit", Json::array()), a.p, a.dim, path, "/unit");
  if (!j.contains("idempotents")) fail(path, "/idempotents", "missing field");
  for (std::size_t i = 0; i < j["idempotents"].size(); ++i)
    a.idempotents.push_back(get_vector(j["idempotents"][i], a.p, a.dim, path,
                                       "/idempotents[" + std::to_string(i) + "]"));
  if (!j.contains("radical")) fail(path, "/radical", "missing field");
  for (std::size_t i = 0; i < j["radical"].size(); ++i)
    a.radical.push_back(
        get_vector(j["radical"][i], a.p, a.dim, path, "/radical[" + std::to_string(i) + "]"));
  try {
    a.validate();
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  auto ptr = std::make_shared<const Algebra>(std::move(a));
  cache.algebras[key] = ptr;
  return ptr;
}

ModulePtr load_module(const std::string& path, IoCache& cache) {
  std::string key = fs::path(path).lexically_normal().string();
  auto it = cache.modules.find(key);
  if (it != cache.modules.end()) return it->second;

  Json j = read_json(path);
  if (!j.contains("algebra")) fail(path, "/algebra", "missing algebra path");
  AlgebraPtr alg = load_algebra(resolve_relative(path, j["algebra"].get<std::string>()), cache);
  if (!j.contains("dim")) fail(path, "/dim", "missing field");
  long long dim = j["dim"].get<long long>();
  if (dim < 0) fail(path, "/dim", "negative dimension");
  if (!j.contains("action") || !j["action"].is_object())
    fail(path, "/action", "expected an object keyed by basis labels");

  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < alg->dim; ++i) {
    const std::string& lab = alg->basis_labels[i];
    if (!j["action"].contains(lab)) fail(path, "/action/" + lab, "missing action matrix");
    action.push_back(get_matrix(j["action"][lab], alg->p, (std::size_t)dim, (std::size_t)dim,
                                path, "/action/" + lab));
  }
  std::string name = j.value("name", fs::path(path).stem().string());
  ModulePtr m;
  try {
    m = make_module(alg, std::move(action), name);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  cache.modules[key] = m;
  return m;
}

Morphism load_morphism(const std::string& path, IoCache& cache) {
  Json j = read_json(path);
  if (!j.contains("source") || !j.contains("target"))
    fail(path, "/source", "morphism needs source and target module paths");
  ModulePtr src = load_module(resolve_relative(path, j["source"].get<std::string>()), cache);
  ModulePtr tgt = load_module(resolve_relative(path, j["target"].get<std::string>()), cache);
  if (!j.contains("matrix")) fail(path, "/matrix", "missing matrix");
  FFMatrix mat = get_matrix(j["matrix"], src->algebra()->p, tgt->dim(), src->dim(), path, "/matrix");
  Morphism f{src, tgt, std::move(mat)};
  try {
    f.validate();
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  return f;
}

CoherentRep load_bundle(const std::string& path) {
  Json j = read_json(path);
  if (!j.contains("p")) fail(path, "/p", "missing characteristic");
  long long p = j["p"].get<long long>();
  if (p < 2 || !is_prime((Fel)p)) fail(path, "/p", "characteristic must be prime");
  if (!j.contains("rank")) fail(path, "/rank", "missing rank");
  long long rank = j["rank"].get<long long>();
  if (rank < 1) fail(path, "/rank", "rank must be positive");
  if (!j.contains("gluing") || !j["gluing"].is_array() || j["gluing"].size() != (std::size_t)rank)
    fail(path, "/gluing", "expected rank rows");
  CoherentRep rep;
  rep.rank = (std::size_t)rank;
  rep.gluing = LaurentMatrix((Fel)p, rep.rank, rep.rank);
  for (std::size_t r = 0; r < rep.rank; ++r) {
    const auto& row = j["gluing"][r];
    if (!row.is_array() || row.size() != rep.rank)
      fail(path, "/gluing[" + std::to_string(r) + "]", "expected rank entries");
    for (std::size_t c = 0; c < rep.rank; ++c) {
      const auto& entry = row[c];
      if (!entry.is_object())
        fail(path, "/gluing[" + std::to_string(r) + "][" + std::to_string(c) + "]",
             "expected an object of degree -> coefficient");
      for (auto it = entry.begin(); it != entry.end(); ++it) {
        int deg = 0;
        try {
          deg = std::stoi(it.key());
        } catch (...) {
          fail(path, "/gluing[" + std::to_string(r) + "][" + std::to_string(c) + "]",
               "degree key '" + it.key() + "' is not an integer");
        }
        Fel cval = get_residue(it.value(), (Fel)p, path,
                               "/gluing[" + std::to_string(r) + "][" + std::to_string(c) + "]/" +
                                   it.key());
        rep.gluing.at(r, c).set(deg, cval);
      }
    }
  }
  auto d = validate_rep(rep);
  if (!d.ok) {
    std::string msg = path + ": invalid bundle";
    for (const auto& s : d.issues) msg += "; " + s;
    throw InputError(msg);
  }
  return rep;
}

Instance load_context(const std::string& path, IoCache& cache, const ContextOverrides& over) {
  Json j = read_json(path);
  if (!j.contains("algebra")) fail(path, "/algebra", "missing algebra path");
  Instance inst;
  inst.algebra = load_algebra(resolve_relative(path, j["algebra"].get<std::string>()), cache);
  inst.session = std::make_shared<Session>(inst.algebra);

  FrobeniusContext ctx;
  ctx.algebra = inst.algebra;
  if (!j.contains("n")) fail(path, "/n", "missing degree n");
  long long n = j["n"].get<long long>();
  if (n < 0) fail(path, "/n", "n must be non-negative");
  ctx.n = (std::size_t)n;
  if (!j.contains("registry") || !j["registry"].is_array())
    fail(path, "/registry", "expected a list of module paths");
  for (const auto& mp : j["registry"]) {
    ModulePtr m = load_module(resolve_relative(path, mp.get<std::string>()), cache);
    if (m->algebra() != inst.algebra)
      fail(path, "/registry", "registry module over a different algebra");
    ctx.registry.push_back(m);
    inst.named[m->name()] = m;
  }
  ctx.registry_complete = j.value("registry_complete", false);
  ctx.gorenstein_mode = j.value("gorenstein_mode", false);
  ctx.zoo_dim_bound = j.value("zoo_dim_bound", (std::size_t)4);
  ctx.seed = over.seed.value_or(j.value("seed", (std::uint64_t)1));
  ctx.paranoid = over.paranoid.value_or(j.value("paranoid", false));
  ctx.test_family =
      module_zoo(inst.algebra, inst.session->opposite(), ctx.zoo_dim_bound, ctx.seed);

  try {
    inst.frob = std::make_shared<NFrob>(ctx, inst.session);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  inst.stable = std::make_shared<StableCat>(inst.frob);
  return inst;
}

Json matrix_to_json(const FFMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json laurent_matrix_to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json entry = Json::object();
      for (const auto& [d, v] : m.at(r, c).coeffs()) entry[std::to_string(d)] = v;
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["p"] = a.p;
  j["basis"] = a.basis_labels;
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim; ++k) row.push_back(a.mult[i][k]);
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  j["unit"] = a.unit;
  j["idempotents"] = a.idempotents;
  j["radical"] = a.radical;
  return j;
}

Json module_to_json(const Module& m, const std::string& algebra_path) {
  Json j;
  j["algebra"] = algebra_path;
  j["dim"] = m.dim();
  j["name"] = m.name();
  Json action = Json::object();
  for (std::size_t i = 0; i < m.algebra()->dim; ++i)
    action[m.algebra()->basis_labels[i]] = matrix_to_json(m.action(i));
  j["action"] = std::move(action);
  return j;
}

Json morphism_to_json(const Morphism& f, const std::string& source_path,
                      const std::string& target_path) {
  Json j;
  j["source"] = source_path;
  j["target"] = target_path;
  j["matrix"] = matrix_to_json(f.matrix);
  return j;
}

Json bundle_to_json(const CoherentRep& rep) {
  Json j;
  j["p"] = rep.p();
  j["rank"] = rep.rank;
  j["gluing"] = laurent_matrix_to_json(rep.gluing);
  return j;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

}  // namespace phantomlab
