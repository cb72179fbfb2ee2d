// Exact Laurent polynomial arithmetic over GF(p): the substrate for the
// projective-line computations. Polynomials live in k[x], anti-polynomials
// in k[x^-1], and gluing data in k[x, x^-1].

#pragma once

#include <map>
#include <string>
#include <vector>

#include "phantomlab/ffmatrix.hpp"

namespace phantomlab {

class LaurentPoly {
 public:
  explicit LaurentPoly(Fel p = 2) : p_(p) {}
  static LaurentPoly monomial(Fel p, int deg, Fel c = 1);
  static LaurentPoly constant(Fel p, Fel c);

  Fel p() const { return p_; }
  Fel coeff(int deg) const;
  void set(int deg, Fel c);
  bool is_zero() const { return c_.empty(); }
  int lo() const;   // smallest degree with nonzero coefficient (0 if zero)
  int hi() const;   // largest
  const std::map<int, Fel>& coeffs() const { return c_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(Fel c) const;
  LaurentPoly negated() const;
  LaurentPoly shifted(int deg) const;   // multiply by x^deg
  bool operator==(const LaurentPoly& o) const = default;

  bool is_polynomial() const { return is_zero() || lo() >= 0; }
  bool is_antipolynomial() const { return is_zero() || hi() <= 0; }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_unit() const { return is_monomial(); }   // units of k[x,x^-1]

  // polynomial part with degrees >= cut / <= cut
  LaurentPoly part_at_least(int cut) const;
  LaurentPoly part_at_most(int cut) const;

  // flip x <-> x^-1 (for reusing k[x] algorithms on k[x^-1])
  LaurentPoly flipped() const;

  std::string to_string() const;

 private:
  Fel p_;
  std::map<int, Fel> c_;   // degree -> nonzero coefficient
};

class LaurentMatrix {
 public:
  LaurentMatrix() : p_(2), rows_(0), cols_(0) {}
  LaurentMatrix(Fel p, std::size_t rows, std::size_t cols);
  static LaurentMatrix identity(Fel p, std::size_t n);

  Fel p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  LaurentPoly& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix scaled(const LaurentPoly& c) const;
  LaurentMatrix shifted(int deg) const;
  LaurentMatrix flipped() const;
  bool operator==(const LaurentMatrix& o) const = default;

  bool is_zero() const;
  bool entries_polynomial() const;
  bool entries_antipolynomial() const;
  int min_valuation() const;   // over nonzero entries; 0 for the zero matrix
  int max_degree() const;

  LaurentPoly determinant() const;        // cofactor expansion, ranks <= 4
  // inverse when det is a unit of k[x,x^-1]; throws InputError otherwise
  LaurentMatrix inverse() const;

  std::string to_string() const;

 private:
  Fel p_;
  std::size_t rows_, cols_;
  std::vector<LaurentPoly> e_;
};

// Smith normal form over k[x] for polynomial matrices (Euclidean reduction).
// Returns the invariant factors (monic, possibly trailing zeros omitted).
std::vector<LaurentPoly> smith_invariants_kx(const LaurentMatrix& poly_matrix);

}  // namespace phantomlab
