#include "phantomlab/ffmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "phantomlab/errors.hpp"

namespace phantomlab {

bool is_prime(Fel p) {
  if (p < 2) return false;
  for (Fel d = 2; (std::uint64_t)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp::Fp(Fel p) : p_(p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
}

Fel Fp::inv(Fel a) const {
  if (a == 0) throw InputError("inverse of zero in GF(" + std::to_string(p_) + ")");
  long long t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return normalize(t);
}

Fel Fp::normalize(long long v) const {
  long long m = v % (long long)p_;
  if (m < 0) m += p_;
  return (Fel)m;
}

FFMatrix::FFMatrix(Fel p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

FFMatrix FFMatrix::identity(Fel p, std::size_t n) {
  FFMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::from_rows(Fel p, const std::vector<std::vector<Fel>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  FFMatrix m(p, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InputError("ragged row list");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c] % p);
  }
  return m;
}

bool FFMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Fel v) { return v == 0; });
}

static void check_same_field(const FFMatrix& a, const FFMatrix& b) {
  if (a.p() != b.p()) throw InputError("matrices over different fields");
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum: shape mismatch");
  FFMatrix r(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + o.e_[i]) % p_;
  return r;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference: shape mismatch");
  FFMatrix r(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + p_ - o.e_[i]) % p_;
  return r;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) throw InputError("matrix product: inner dimension mismatch");
  FFMatrix r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Fel a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.e_[i * o.cols_ + j] =
            (Fel)((r.e_[i * o.cols_ + j] + (std::uint64_t)a * o.at(k, j)) % p_);
    }
  return r;
}

FFMatrix FFMatrix::scaled(Fel c) const {
  FFMatrix r(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (Fel)((std::uint64_t)e_[i] * c % p_);
  return r;
}

FFMatrix FFMatrix::negated() const { return scaled(p_ - 1 == 0 ? 0 : p_ - 1); }

FFMatrix FFMatrix::transposed() const {
  FFMatrix r(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::vector<Fel> FFMatrix::apply(std::span<const Fel> x) const {
  if (x.size() != cols_) throw InputError("apply: vector length mismatch");
  std::vector<Fel> y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (std::uint64_t)at(i, j) * x[j] % p_;
    y[i] = (Fel)(acc % p_);
  }
  return y;
}

std::vector<Fel> FFMatrix::apply_row(std::span<const Fel> x) const {
  if (x.size() != rows_) throw InputError("apply_row: vector length mismatch");
  std::vector<Fel> y(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      y[j] = (Fel)((y[j] + (std::uint64_t)x[i] * at(i, j)) % p_);
  }
  return y;
}

std::vector<Fel> FFMatrix::row(std::size_t r) const {
  return std::vector<Fel>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void FFMatrix::set_row(std::size_t r, std::span<const Fel> v) {
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

FFMatrix FFMatrix::hstack(const FFMatrix& right) const {
  check_same_field(*this, right);
  if (rows_ != right.rows_) throw InputError("hstack: row count mismatch");
  FFMatrix r(p_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.at(i, j));
  }
  return r;
}

FFMatrix FFMatrix::vstack(const FFMatrix& below) const {
  check_same_field(*this, below);
  if (cols_ != below.cols_) throw InputError("vstack: column count mismatch");
  FFMatrix r(p_, rows_ + below.rows_, cols_);
  std::copy(e_.begin(), e_.end(), r.e_.begin());
  std::copy(below.e_.begin(), below.e_.end(), r.e_.begin() + e_.size());
  return r;
}

FFMatrix FFMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
  FFMatrix r(p_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
  return r;
}

// Deterministic pivoting: scan columns left to right, take the first nonzero
// entry below the current row. Reproducible bit for bit.
RrefResult FFMatrix::rref() const {
  Fp f(p_);
  FFMatrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && m.at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) {
        Fel t = m.at(r, j);
        m.set(r, j, m.at(sel, j));
        m.set(sel, j, t);
      }
    Fel piv_inv = f.inv(m.at(r, c));
    for (std::size_t j = 0; j < cols_; ++j) m.set(r, j, f.mul(m.at(r, j), piv_inv));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Fel v = m.at(i, c);
      if (v == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(v, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t FFMatrix::rank() const { return rref().pivots.size(); }

std::optional<std::vector<Fel>> FFMatrix::solve(std::span<const Fel> b) const {
  if (b.size() != rows_) throw InputError("solve: rhs length mismatch");
  FFMatrix aug(p_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i]);
  }
  RrefResult r = aug.rref();
  for (std::size_t piv : r.pivots)
    if (piv == cols_) return std::nullopt;   // a row (0 ... 0 | 1): inconsistent
  std::vector<Fel> x(cols_, 0);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat.at(i, cols_);
  return x;
}

std::optional<FFMatrix> FFMatrix::solve_matrix(const FFMatrix& b) const {
  if (b.rows() != rows_) throw InputError("solve_matrix: rhs row mismatch");
  FFMatrix x(p_, cols_, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<Fel> col(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col[i] = b.at(i, j);
    auto sol = solve(col);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < cols_; ++i) x.set(i, j, (*sol)[i]);
  }
  return x;
}

FFMatrix FFMatrix::kernel_rows() const {
  RrefResult r = rref();
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c) ++pi;
      else free_cols.push_back(c);
    }
  }
  Fp f(p_);
  FFMatrix out(p_, free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out.set(k, free_cols[k], 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      out.set(k, r.pivots[i], f.neg(r.mat.at(i, free_cols[k])));
  }
  return out;
}

FFMatrix FFMatrix::image_rows() const {
  // Column space = row space of the transpose.
  RrefResult r = transposed().rref();
  FFMatrix out(p_, r.pivots.size(), rows_);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.set_row(i, r.mat.row(i));
  return out;
}

std::string FFMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over GF(" << p_ << ")";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "\n[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  return os.str();
}

Subspace::Subspace(Fel p, std::size_t ambient)
    : p_(p), ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::from_rows(const FFMatrix& rows) {
  Subspace s(rows.p(), rows.cols());
  auto r = rows.rref();
  FFMatrix b(rows.p(), r.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) b.set_row(i, r.mat.row(i));
  s.basis_ = std::move(b);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(Fel p, std::size_t ambient) {
  return from_rows(FFMatrix::identity(p, ambient));
}

bool Subspace::contains(std::span<const Fel> v) const {
  if (v.size() != ambient_) throw InputError("contains: ambient mismatch");
  return is_zero_vector(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.p_ != p_) throw InputError("sum: ambient mismatch");
  return from_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.p_ != p_)
    throw InputError("intersect: ambient mismatch");
  // Zassenhaus-free version: x in U cap V iff x = a*basisU = b*basisV.
  // Solve [basisU^T | -basisV^T] * (a,b)^T = 0, read off the U part.
  FFMatrix ut = basis_.transposed();
  FFMatrix vt = other.basis_.transposed().negated();
  FFMatrix sys = ut.hstack(vt);
  FFMatrix ker = sys.kernel_rows();
  FFMatrix rows(p_, ker.rows(), ambient_);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    auto krow = ker.row(i);
    std::vector<Fel> a(krow.begin(), krow.begin() + dim());
    rows.set_row(i, basis_.apply_row(a));
  }
  return from_rows(rows);
}

std::vector<Fel> Subspace::reduce(std::span<const Fel> v) const {
  if (v.size() != ambient_) throw InputError("reduce: ambient mismatch");
  Fp f(p_);
  std::vector<Fel> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Fel c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
  }
  return w;
}

std::optional<std::vector<Fel>> Subspace::coordinates(std::span<const Fel> v) const {
  Fp f(p_);
  std::vector<Fel> w(v.begin(), v.end());
  std::vector<Fel> coords(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    Fel c = w[pivots_[i]];
    coords[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
  }
  if (!is_zero_vector(w)) return std::nullopt;
  return coords;
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small))
    throw InputError("quotient_dim: second subspace is not contained in the first");
  return big.dim() - small.dim();
}

std::vector<Fel> zero_vector(std::size_t n) { return std::vector<Fel>(n, 0); }

std::vector<Fel> add_vectors(Fel p, std::span<const Fel> a, std::span<const Fel> b) {
  if (a.size() != b.size()) throw InputError("vector sum: length mismatch");
  std::vector<Fel> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

std::vector<Fel> sub_vectors(Fel p, std::span<const Fel> a, std::span<const Fel> b) {
  if (a.size() != b.size()) throw InputError("vector difference: length mismatch");
  std::vector<Fel> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p - b[i]) % p;
  return r;
}

std::vector<Fel> scale_vector(Fel p, Fel c, std::span<const Fel> a) {
  std::vector<Fel> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (Fel)((std::uint64_t)a[i] * c % p);
  return r;
}

bool is_zero_vector(std::span<const Fel> v) {
  return std::all_of(v.begin(), v.end(), [](Fel x) { return x == 0; });
}

}  // namespace phantomlab
