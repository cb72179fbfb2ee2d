#include "phantomlab/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "phantomlab/errors.hpp"

namespace phantomlab {

std::vector<Fel> Algebra::product(std::span<const Fel> x, std::span<const Fel> y) const {
  Fp f(p);
  std::vector<Fel> r(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Fel c = f.mul(x[i], y[j]);
      const auto& m = mult[i][j];
      for (std::size_t k = 0; k < dim; ++k) r[k] = f.add(r[k], f.mul(c, m[k]));
    }
  }
  return r;
}

FFMatrix Algebra::left_mult(std::span<const Fel> x) const {
  Fp f(p);
  FFMatrix m(p, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t k = 0; k < dim; ++k)
        m.set(k, j, f.add(m.at(k, j), f.mul(x[i], mult[i][j][k])));
    }
  return m;
}

FFMatrix Algebra::right_mult(std::span<const Fel> x) const {
  Fp f(p);
  FFMatrix m(p, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t k = 0; k < dim; ++k)
        m.set(k, j, f.add(m.at(k, j), f.mul(x[i], mult[j][i][k])));
    }
  return m;
}

std::vector<Fel> Algebra::basis_vector(std::size_t i) const {
  std::vector<Fel> v(dim, 0);
  v[i] = 1;
  return v;
}

Subspace Algebra::radical_subspace() const {
  FFMatrix rows(p, radical.size(), dim);
  for (std::size_t i = 0; i < radical.size(); ++i) rows.set_row(i, radical[i]);
  return Subspace::from_rows(rows);
}

void Algebra::validate() const {
  if (basis_labels.size() != dim) throw InputError("algebra: label count != dim");
  if (unit.size() != dim) throw InputError("algebra: unit vector has wrong length");
  if (mult.size() != dim) throw InputError("algebra: mult tensor has wrong shape");
  for (const auto& row : mult) {
    if (row.size() != dim) throw InputError("algebra: mult tensor has wrong shape");
    for (const auto& v : row)
      if (v.size() != dim) throw InputError("algebra: mult tensor has wrong shape");
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        auto lhs = product(product(basis_vector(i), basis_vector(j)), basis_vector(k));
        auto rhs = product(basis_vector(i), product(basis_vector(j), basis_vector(k)));
        if (lhs != rhs)
          throw InputError("algebra: associativity fails at basis triple (" +
                           basis_labels[i] + "," + basis_labels[j] + "," + basis_labels[k] + ")");
      }

  for (std::size_t i = 0; i < dim; ++i) {
    if (product(unit, basis_vector(i)) != basis_vector(i) ||
        product(basis_vector(i), unit) != basis_vector(i))
      throw InputError("algebra: unit law fails at basis element " + basis_labels[i]);
  }

  std::vector<Fel> idem_sum(dim, 0);
  for (std::size_t a = 0; a < idempotents.size(); ++a) {
    const auto& e = idempotents[a];
    if (e.size() != dim) throw InputError("algebra: idempotent vector has wrong length");
    if (product(e, e) != e)
      throw InputError("algebra: idempotent " + std::to_string(a) + " is not idempotent");
    for (std::size_t b = 0; b < idempotents.size(); ++b) {
      if (a == b) continue;
      if (!is_zero_vector(product(e, idempotents[b])))
        throw InputError("algebra: idempotents " + std::to_string(a) + "," +
                         std::to_string(b) + " are not orthogonal");
    }
    idem_sum = add_vectors(p, idem_sum, e);
  }
  if (idem_sum != unit) throw InputError("algebra: idempotents do not sum to the unit");

  // Radical: two-sided ideal, nilpotent, with a split-basic complement.
  Subspace rad = radical_subspace();
  for (const auto& r : radical) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (!rad.contains(product(basis_vector(i), r)) ||
          !rad.contains(product(r, basis_vector(i))))
        throw InputError("algebra: radical is not a two-sided ideal");
    }
  }
  {
    // nilpotency: powers of the span must shrink to zero
    Subspace power = rad;
    for (std::size_t it = 0; it <= dim && power.dim() > 0; ++it) {
      FFMatrix rows(p, power.dim() * rad.dim(), dim);
      std::size_t k = 0;
      for (std::size_t i = 0; i < power.dim(); ++i)
        for (std::size_t j = 0; j < rad.dim(); ++j)
          rows.set_row(k++, product(power.basis().row(i), rad.basis().row(j)));
      Subspace next = Subspace::from_rows(rows);
      if (next.dim() >= power.dim() && power.dim() > 0)
        throw InputError("algebra: radical is not nilpotent");
      power = next;
    }
  }
  if (idempotents.size() + rad.dim() != dim)
    throw InputError("algebra: not basic split (dim != #idempotents + dim radical)");
}

Algebra Algebra::opposite() const {
  Algebra op = *this;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) op.mult[i][j] = mult[j][i];
  return op;
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != dim) throw InputError("with_labels: wrong number of labels");
  Algebra a = *this;
  a.basis_labels = std::move(labels);
  return a;
}

namespace {

// A path stored in application order: ar[0] is applied first.
struct Path {
  std::size_t src, tgt;
  std::vector<std::size_t> ar;

  bool operator<(const Path& o) const {
    if (ar.size() != o.ar.size()) return ar.size() < o.ar.size();
    if (src != o.src) return src < o.src;
    return ar < o.ar;
  }
  bool operator==(const Path& o) const = default;
};

std::string path_label(const Quiver& q, const Path& path) {
  if (path.ar.empty()) return "e" + std::to_string(path.src + 1);
  std::string s;
  // written order = reverse application order
  for (auto it = path.ar.rbegin(); it != path.ar.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrows[*it].label;
  }
  return s;
}

bool contains_zero_word(const Path& path,
                        const std::vector<std::vector<std::size_t>>& zero_words) {
  for (const auto& w : zero_words) {
    if (w.empty() || w.size() > path.ar.size()) continue;
    for (std::size_t off = 0; off + w.size() <= path.ar.size(); ++off) {
      if (std::equal(w.begin(), w.end(), path.ar.begin() + off)) return true;
    }
  }
  return false;
}

}  // namespace

Algebra algebra_from_quiver(Fel p, const Quiver& q, const PathTruncation& trunc) {
  if (q.n_vertices == 0) throw InputError("quiver: need at least one vertex");
  for (const auto& a : q.arrows)
    if (a.src >= q.n_vertices || a.tgt >= q.n_vertices)
      throw InputError("quiver: arrow endpoint out of range");

  std::map<std::string, std::size_t> arrow_by_label;
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    if (arrow_by_label.count(q.arrows[i].label))
      throw InputError("quiver: duplicate arrow label " + q.arrows[i].label);
    arrow_by_label[q.arrows[i].label] = i;
  }
  std::vector<std::vector<std::size_t>> zero_words;
  for (const auto& w : trunc.zero_words) {
    std::vector<std::size_t> word;
    for (const auto& lab : w) {
      auto it = arrow_by_label.find(lab);
      if (it == arrow_by_label.end()) throw InputError("quiver: unknown arrow in relation: " + lab);
      word.push_back(it->second);
    }
    zero_words.push_back(std::move(word));
  }

  const std::size_t hard_cap = 64;
  std::size_t max_len = trunc.max_length.value_or(hard_cap);

  std::vector<Path> basis;
  for (std::size_t v = 0; v < q.n_vertices; ++v) basis.push_back({v, v, {}});
  std::vector<Path> frontier = basis;
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& path : frontier) {
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        if (q.arrows[ai].src != path.tgt) continue;
        Path longer{path.src, q.arrows[ai].tgt, path.ar};
        longer.ar.push_back(ai);
        if (contains_zero_word(longer, zero_words)) continue;
        next.push_back(std::move(longer));
      }
    }
    if (len == max_len && !next.empty() && !trunc.max_length.has_value())
      throw InputError("quiver: infinite path basis and no truncation bound supplied");
    for (auto& path : next) basis.push_back(path);
    frontier = std::move(next);
  }
  std::sort(basis.begin(), basis.end());

  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  Algebra alg;
  alg.p = p;
  alg.dim = basis.size();
  for (const auto& path : basis) alg.basis_labels.push_back(path_label(q, path));

  alg.mult.assign(alg.dim, std::vector<std::vector<Fel>>(alg.dim, std::vector<Fel>(alg.dim, 0)));
  for (std::size_t i = 0; i < alg.dim; ++i) {
    for (std::size_t j = 0; j < alg.dim; ++j) {
      // product basis_i * basis_j: apply j first
      const Path& pi = basis[i];
      const Path& pj = basis[j];
      if (pj.tgt != pi.src) continue;
      Path prod{pj.src, pi.tgt, pj.ar};
      prod.ar.insert(prod.ar.end(), pi.ar.begin(), pi.ar.end());
      if (prod.ar.size() > max_len) continue;
      if (contains_zero_word(prod, zero_words)) continue;
      auto it = index.find(prod);
      if (it == index.end()) continue;   // killed by truncation
      alg.mult[i][j][it->second] = 1;
    }
  }

  alg.unit.assign(alg.dim, 0);
  for (std::size_t v = 0; v < q.n_vertices; ++v) {
    std::size_t idx = index.at(Path{v, v, {}});
    alg.unit[idx] = 1;
    std::vector<Fel> e(alg.dim, 0);
    e[idx] = 1;
    alg.idempotents.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < alg.dim; ++i) {
    if (!basis[i].ar.empty()) {
      std::vector<Fel> r(alg.dim, 0);
      r[i] = 1;
      alg.radical.push_back(std::move(r));
    }
  }
  alg.validate();
  return alg;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (a.p != b.p) throw InputError("tensor: different base fields");
  Fp f(a.p);
  Algebra t;
  t.p = a.p;
  t.dim = a.dim * b.dim;
  auto idx = [&](std::size_t i, std::size_t j) { return i * b.dim + j; };
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      t.basis_labels.push_back(a.basis_labels[i] + "|" + b.basis_labels[j]);

  t.mult.assign(t.dim, std::vector<std::vector<Fel>>(t.dim, std::vector<Fel>(t.dim, 0)));
  for (std::size_t i1 = 0; i1 < a.dim; ++i1)
    for (std::size_t j1 = 0; j1 < b.dim; ++j1)
      for (std::size_t i2 = 0; i2 < a.dim; ++i2)
        for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
          const auto& ca = a.mult[i1][i2];
          const auto& cb = b.mult[j1][j2];
          auto& out = t.mult[idx(i1, j1)][idx(i2, j2)];
          for (std::size_t k1 = 0; k1 < a.dim; ++k1) {
            if (ca[k1] == 0) continue;
            for (std::size_t k2 = 0; k2 < b.dim; ++k2) {
              if (cb[k2] == 0) continue;
              out[idx(k1, k2)] = f.add(out[idx(k1, k2)], f.mul(ca[k1], cb[k2]));
            }
          }
        }

  t.unit.assign(t.dim, 0);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      t.unit[idx(i, j)] = f.mul(a.unit[i], b.unit[j]);

  for (const auto& ea : a.idempotents)
    for (const auto& eb : b.idempotents) {
      std::vector<Fel> e(t.dim, 0);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) e[idx(i, j)] = f.mul(ea[i], eb[j]);
      t.idempotents.push_back(std::move(e));
    }

  // rad(A ox B) = rad A ox B + A ox rad B for split basic algebras
  std::vector<std::vector<Fel>> rad_rows;
  for (const auto& ra : a.radical)
    for (std::size_t j = 0; j < b.dim; ++j) {
      std::vector<Fel> v(t.dim, 0);
      for (std::size_t i = 0; i < a.dim; ++i) v[idx(i, j)] = ra[i];
      rad_rows.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (const auto& rb : b.radical) {
      std::vector<Fel> v(t.dim, 0);
      for (std::size_t j = 0; j < b.dim; ++j) v[idx(i, j)] = rb[j];
      rad_rows.push_back(std::move(v));
    }
  FFMatrix rows(t.p, rad_rows.size(), t.dim);
  for (std::size_t i = 0; i < rad_rows.size(); ++i) rows.set_row(i, rad_rows[i]);
  Subspace rad = Subspace::from_rows(rows);
  for (std::size_t i = 0; i < rad.dim(); ++i) t.radical.push_back(rad.basis().row(i));

  t.validate();
  return t;
}

Algebra make_lambda0() {
  Quiver q;
  q.n_vertices = 1;
  q.arrows = {{"t", 0, 0}};
  PathTruncation trunc;
  trunc.zero_words = {{"t", "t"}};
  return algebra_from_quiver(2, q, trunc);
}

Algebra make_lambda1() {
  Algebra lam0 = make_lambda0();
  Quiver a2;
  a2.n_vertices = 2;
  a2.arrows = {{"a", 0, 1}};
  Algebra ka2 = algebra_from_quiver(2, a2);
  Algebra t = tensor_algebra(lam0, ka2);
  // basis pairs in order (1,e1),(1,e2),(1,a),(t,e1),(t,e2),(t,a)
  return t.with_labels({"e1", "e2", "a", "t*e1", "t*e2", "t*a"});
}

}  // namespace phantomlab
