// Finite-dimensional algebras over GF(p) with a distinguished basis.
//
// Products follow function composition: (x*y) acts as "y first, then x", so
// module actions satisfy act(x*y) = act(x)*act(y) as matrices. Shipped
// algebras are basic and split: the semisimple quotient is a product of
// copies of GF(p), one per primitive idempotent, and the radical has an
// explicit basis (positive-length paths for quiver algebras).

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phantomlab/ffmatrix.hpp"

namespace phantomlab {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  Fel p = 2;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  // mult[i][j] = coordinate vector of basis_i * basis_j
  std::vector<std::vector<std::vector<Fel>>> mult;
  std::vector<Fel> unit;
  std::vector<std::vector<Fel>> idempotents;   // primitive, orthogonal, sum = unit
  std::vector<std::vector<Fel>> radical;       // basis of rad(A)

  std::vector<Fel> product(std::span<const Fel> x, std::span<const Fel> y) const;
  FFMatrix left_mult(std::span<const Fel> x) const;    // a -> x*a on coordinates
  FFMatrix right_mult(std::span<const Fel> x) const;   // a -> a*x
  std::vector<Fel> basis_vector(std::size_t i) const;

  Subspace radical_subspace() const;
  std::size_t n_idempotents() const { return idempotents.size(); }

  // Throws InputError naming the violated law (associativity, unit,
  // idempotent orthogonality, radical ideal/nilpotency, basic-split count).
  void validate() const;

  Algebra opposite() const;
  Algebra with_labels(std::vector<std::string> labels) const;
};

struct Quiver {
  struct Arrow {
    std::string label;
    std::size_t src = 0, tgt = 0;
  };
  std::size_t n_vertices = 0;
  std::vector<Arrow> arrows;
};

// Monomial truncation data: a global path-length bound and/or zero relations
// given as arrow label sequences in application order (first arrow applied
// listed first). A path dies if it meets the bound or contains a zero word.
struct PathTruncation {
  std::optional<std::size_t> max_length;
  std::vector<std::vector<std::string>> zero_words;
};

// Path algebra modulo monomial relations; basis = surviving paths. Throws
// InputError if the path basis is infinite and no truncation bounds it.
Algebra algebra_from_quiver(Fel p, const Quiver& q, const PathTruncation& trunc = {});

// Tensor product over GF(p); basis pairs labelled "a|b".
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

// Shipped instances.
Algebra make_lambda0();   // GF(2)[t]/(t^2)
Algebra make_lambda1();   // GF(2)[t]/(t^2) tensor kA2, dim 6

}  // namespace phantomlab
