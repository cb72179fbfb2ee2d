#include "doctest.h"
#include "phantomlab/ffmatrix.hpp"
#include "phantomlab/rng.hpp"

using namespace phantomlab;

namespace {

FFMatrix random_matrix(Fel p, std::size_t r, std::size_t c, Rng& rng) {
  FFMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, (Fel)rng.below(p));
  return m;
}

// Independent oracle: naive Gaussian elimination with explicit modular
// inverses, no pivot strategy shared with the implementation.
std::size_t naive_rank(FFMatrix m) {
  Fp f(m.p());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t piv = m.rows();
    for (std::size_t r = rank; r < m.rows(); ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Fel t = m.at(rank, j);
      m.set(rank, j, m.at(piv, j));
      m.set(piv, j, t);
    }
    Fel inv = f.inv(m.at(rank, col));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      Fel factor = f.mul(m.at(r, col), inv);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(rank, j))));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rref on the 2x2 identity over GF(2)") {
  FFMatrix id = FFMatrix::identity(2, 2);
  auto r = id.rref();
  CHECK(r.mat == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of the all-ones 2x2 over GF(2)") {
  FFMatrix m = FFMatrix::from_rows(2, {{1, 1}, {1, 1}});
  auto r = m.rref();
  CHECK(r.mat == FFMatrix::from_rows(2, {{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with the naive elimination oracle on random 6x6 over GF(5)") {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    FFMatrix m = random_matrix(5, 6, 6, rng);
    CHECK(m.rank() == naive_rank(m));
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    FFMatrix m = random_matrix(3, 5, 7, rng);
    auto once = m.rref();
    auto twice = once.mat.rref();
    CHECK(once.mat == twice.mat);
    CHECK(once.pivots == twice.pivots);
  }
}

TEST_CASE("solve: identity system over GF(5)") {
  FFMatrix id = FFMatrix::identity(5, 3);
  std::vector<Fel> b{1, 0, 2};
  auto x = id.solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
}

TEST_CASE("solve: inconsistent zero system") {
  FFMatrix z(2, 2, 2);
  std::vector<Fel> b{1, 0};
  CHECK_FALSE(z.solve(b).has_value());
}

TEST_CASE("solve: constructed consistent systems have exact residual") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    Fel p = (t % 2) ? 5 : 3;
    FFMatrix a = random_matrix(p, 4, 6, rng);
    std::vector<Fel> x0(6);
    for (auto& v : x0) v = (Fel)rng.below(p);
    auto b = a.apply(x0);
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("solve returns a value iff b lies in the image span") {
  Rng rng(123);
  for (int t = 0; t < 60; ++t) {
    FFMatrix a = random_matrix(2, 4, 3, rng);
    std::vector<Fel> b(4);
    for (auto& v : b) v = (Fel)rng.below(2);
    Subspace im = Subspace::from_rows(a.image_rows());
    CHECK(a.solve(b).has_value() == im.contains(b));
  }
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    Fel p = (t % 3 == 0) ? 2 : ((t % 3 == 1) ? 3 : 5);
    FFMatrix a = random_matrix(p, 5, 4, rng);
    CHECK(a.kernel_rows().rows() + a.image_rows().rows() == a.cols());
    // kernel rows really are in the kernel
    for (std::size_t i = 0; i < a.kernel_rows().rows(); ++i)
      CHECK(is_zero_vector(a.apply(a.kernel_rows().row(i))));
  }
}

TEST_CASE("kernel of the identity is zero") {
  CHECK(FFMatrix::identity(3, 4).kernel_rows().rows() == 0);
}

TEST_CASE("dimension formula for sums and intersections") {
  Rng rng(2024);
  for (int t = 0; t < 30; ++t) {
    Fel p = (t % 2) ? 2 : 5;
    Subspace u = Subspace::from_rows(random_matrix(p, 3, 6, rng));
    Subspace v = Subspace::from_rows(random_matrix(p, 3, 6, rng));
    CHECK(u.sum(v).dim() + u.intersect(v).dim() == u.dim() + v.dim());
    CHECK(u.sum(v).contains(u));
    CHECK(u.contains(u.intersect(v)));
  }
}

TEST_CASE("quotient dimension") {
  Subspace full = Subspace::full(3, 4);
  Rng rng(8);
  FFMatrix line(3, 1, 4);
  for (std::size_t j = 0; j < 4; ++j) line.set(0, j, (Fel)rng.below(3));
  line.set(0, 0, 1);
  Subspace l = Subspace::from_rows(line);
  CHECK(quotient_dim(full, l) == 3);
  CHECK_THROWS(quotient_dim(l, full));
}

TEST_CASE("reduce gives canonical coset representatives") {
  Rng rng(77);
  Subspace u = Subspace::from_rows(random_matrix(5, 2, 5, rng));
  for (int t = 0; t < 20; ++t) {
    std::vector<Fel> v(5);
    for (auto& x : v) x = (Fel)rng.below(5);
    std::vector<Fel> w = add_vectors(5, v, u.basis().rows() ? u.basis().row(t % std::max<std::size_t>(u.dim(), 1)) : zero_vector(5));
    if (u.dim() > 0) CHECK(u.reduce(v) == u.reduce(w));
    CHECK(u.contains(sub_vectors(5, v, u.reduce(v))));
  }
}
