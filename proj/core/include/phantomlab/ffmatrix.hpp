// Exact dense linear algebra over a prime field GF(p).
//
// Conventions used throughout the project:
//   * vectors are coordinate rows (std::vector<Fel>), matrices act on
//     column vectors: y = A*x with A (rows x cols), x of length cols;
//   * a Subspace keeps its basis rows in reduced row echelon form, so
//     two subspaces are equal iff their basis matrices are equal and
//     coset representatives (reduce()) are canonical.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace phantomlab {

using Fel = std::uint32_t;   // residue in [0, p)

// Modular arithmetic for a fixed prime p. No extension fields.
class Fp {
 public:
  explicit Fp(Fel p);

  Fel p() const { return p_; }
  Fel add(Fel a, Fel b) const { return (a + b) % p_; }
  Fel sub(Fel a, Fel b) const { return (a + p_ - b) % p_; }
  Fel mul(Fel a, Fel b) const { return static_cast<Fel>((std::uint64_t)a * b % p_); }
  Fel neg(Fel a) const { return a == 0 ? 0 : p_ - a; }
  Fel inv(Fel a) const;        // extended Euclid; throws on a == 0
  Fel normalize(long long v) const;

 private:
  Fel p_;
};

bool is_prime(Fel p);

class FFMatrix;
struct RrefResult;

class FFMatrix {
 public:
  FFMatrix() : p_(2), rows_(0), cols_(0) {}
  FFMatrix(Fel p, std::size_t rows, std::size_t cols);
  static FFMatrix identity(Fel p, std::size_t n);
  static FFMatrix from_rows(Fel p, const std::vector<std::vector<Fel>>& rows);

  Fel p() const { return p_; }
  Fp field() const { return Fp(p_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fel v) { e_[r * cols_ + c] = v; }

  bool is_zero() const;
  bool operator==(const FFMatrix& o) const = default;

  FFMatrix operator+(const FFMatrix& o) const;
  FFMatrix operator-(const FFMatrix& o) const;
  FFMatrix operator*(const FFMatrix& o) const;
  FFMatrix scaled(Fel c) const;
  FFMatrix negated() const;
  FFMatrix transposed() const;

  std::vector<Fel> apply(std::span<const Fel> x) const;        // A*x
  std::vector<Fel> apply_row(std::span<const Fel> x) const;    // x*A

  std::vector<Fel> row(std::size_t r) const;
  void set_row(std::size_t r, std::span<const Fel> v);
  FFMatrix hstack(const FFMatrix& right) const;
  FFMatrix vstack(const FFMatrix& below) const;
  FFMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  RrefResult rref() const;
  std::size_t rank() const;

  // One solution of A*x = b with free coordinates set to 0, or nullopt.
  std::optional<std::vector<Fel>> solve(std::span<const Fel> b) const;
  // Columnwise solve A*X = B; nullopt if any column is inconsistent.
  std::optional<FFMatrix> solve_matrix(const FFMatrix& b) const;

  // Rows span the null space {x : A*x = 0} / the column space of A.
  FFMatrix kernel_rows() const;
  FFMatrix image_rows() const;

  std::string to_string() const;

 private:
  Fel p_;
  std::size_t rows_, cols_;
  std::vector<Fel> e_;
};

struct RrefResult {
  FFMatrix mat;
  std::vector<std::size_t> pivots;   // strictly increasing pivot columns
};

class Subspace {
 public:
  Subspace() : p_(2), ambient_(0) {}
  Subspace(Fel p, std::size_t ambient);                       // zero subspace
  static Subspace from_rows(const FFMatrix& rows);            // span of rows
  static Subspace full(Fel p, std::size_t ambient);

  Fel p() const { return p_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FFMatrix& basis() const { return basis_; }            // RREF rows
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Fel> v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // Canonical coset representative: v with the pivot coordinates of this
  // subspace eliminated. reduce(v) == reduce(w) iff v - w lies in the space.
  std::vector<Fel> reduce(std::span<const Fel> v) const;
  std::optional<std::vector<Fel>> coordinates(std::span<const Fel> v) const;

 private:
  Fel p_;
  std::size_t ambient_;
  FFMatrix basis_;                     // dim x ambient, RREF
  std::vector<std::size_t> pivots_;
};

// dim big - dim small; requires small <= big as subspaces.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

std::vector<Fel> zero_vector(std::size_t n);
std::vector<Fel> add_vectors(Fel p, std::span<const Fel> a, std::span<const Fel> b);
std::vector<Fel> sub_vectors(Fel p, std::span<const Fel> a, std::span<const Fel> b);
std::vector<Fel> scale_vector(Fel p, Fel c, std::span<const Fel> a);
bool is_zero_vector(std::span<const Fel> v);

}  // namespace phantomlab
