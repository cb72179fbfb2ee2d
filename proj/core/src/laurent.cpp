#include "phantomlab/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "phantomlab/errors.hpp"

namespace phantomlab {

LaurentPoly LaurentPoly::monomial(Fel p, int deg, Fel c) {
  LaurentPoly out(p);
  out.set(deg, c % p);
  return out;
}

LaurentPoly LaurentPoly::constant(Fel p, Fel c) { return monomial(p, 0, c); }

Fel LaurentPoly::coeff(int deg) const {
  auto it = c_.find(deg);
  return it == c_.end() ? 0 : it->second;
}

void LaurentPoly::set(int deg, Fel c) {
  c %= p_;
  if (c == 0) c_.erase(deg);
  else c_[deg] = c;
}

int LaurentPoly::lo() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::hi() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [d, c] : o.c_) out.set(d, (out.coeff(d) + c) % p_);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [d, c] : o.c_) out.set(d, (out.coeff(d) + p_ - c) % p_);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(p_);
  for (const auto& [d1, c1] : c_)
    for (const auto& [d2, c2] : o.c_)
      out.set(d1 + d2, (Fel)((out.coeff(d1 + d2) + (std::uint64_t)c1 * c2) % p_));
  return out;
}

LaurentPoly LaurentPoly::scaled(Fel c) const {
  LaurentPoly out(p_);
  for (const auto& [d, v] : c_) out.set(d, (Fel)((std::uint64_t)v * c % p_));
  return out;
}

LaurentPoly LaurentPoly::negated() const { return scaled(p_ - 1); }

LaurentPoly LaurentPoly::shifted(int deg) const {
  LaurentPoly out(p_);
  for (const auto& [d, v] : c_) out.set(d + deg, v);
  return out;
}

LaurentPoly LaurentPoly::part_at_least(int cut) const {
  LaurentPoly out(p_);
  for (const auto& [d, v] : c_)
    if (d >= cut) out.set(d, v);
  return out;
}

LaurentPoly LaurentPoly::part_at_most(int cut) const {
  LaurentPoly out(p_);
  for (const auto& [d, v] : c_)
    if (d <= cut) out.set(d, v);
  return out;
}

LaurentPoly LaurentPoly::flipped() const {
  LaurentPoly out(p_);
  for (const auto& [d, v] : c_) out.set(-d, v);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, v] : c_) {
    if (!first) os << " + ";
    first = false;
    if (d == 0 || v != 1) os << v;
    if (d != 0) {
      os << "x";
      if (d != 1) os << "^" << d;
    }
  }
  return os.str();
}

LaurentMatrix::LaurentMatrix(Fel p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, LaurentPoly(p)) {}

LaurentMatrix LaurentMatrix::identity(Fel p, std::size_t n) {
  LaurentMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(p, 1);
  return m;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("laurent sum: shape mismatch");
  LaurentMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("laurent difference: shape mismatch");
  LaurentMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("laurent product: inner dimension mismatch");
  LaurentMatrix out(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
    }
  return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& c) const {
  LaurentMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
  return out;
}

LaurentMatrix LaurentMatrix::shifted(int deg) const {
  LaurentMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].shifted(deg);
  return out;
}

LaurentMatrix LaurentMatrix::flipped() const {
  LaurentMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].flipped();
  return out;
}

bool LaurentMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& q) { return q.is_zero(); });
}

bool LaurentMatrix::entries_polynomial() const {
  return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& q) { return q.is_polynomial(); });
}

bool LaurentMatrix::entries_antipolynomial() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const LaurentPoly& q) { return q.is_antipolynomial(); });
}

int LaurentMatrix::min_valuation() const {
  int v = 0;
  bool seen = false;
  for (const auto& q : e_)
    if (!q.is_zero()) {
      v = seen ? std::min(v, q.lo()) : q.lo();
      seen = true;
    }
  return v;
}

int LaurentMatrix::max_degree() const {
  int v = 0;
  bool seen = false;
  for (const auto& q : e_)
    if (!q.is_zero()) {
      v = seen ? std::max(v, q.hi()) : q.hi();
      seen = true;
    }
  return v;
}

LaurentPoly LaurentMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant: not square");
  if (rows_ == 0) return LaurentPoly::constant(p_, 1);
  if (rows_ == 1) return at(0, 0);
  LaurentPoly det(p_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (at(0, c).is_zero()) continue;
    LaurentMatrix minor(p_, rows_ - 1, cols_ - 1);
    for (std::size_t i = 1; i < rows_; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = at(i, j);
      }
    }
    LaurentPoly term = at(0, c) * minor.determinant();
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

LaurentMatrix LaurentMatrix::inverse() const {
  LaurentPoly det = determinant();
  if (!det.is_unit()) throw InputError("laurent inverse: determinant is not a unit");
  Fp f(p_);
  int d = det.lo();
  Fel cinv = f.inv(det.coeff(d));
  LaurentMatrix adj(p_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      LaurentMatrix minor(p_, rows_ - 1, cols_ - 1);
      std::size_t ii = 0;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == i) continue;
        std::size_t jj = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
          if (c == j) continue;
          minor.at(ii, jj++) = at(r, c);
        }
        ++ii;
      }
      LaurentPoly cof = minor.determinant();
      if ((i + j) % 2 == 1) cof = cof.negated();
      adj.at(j, i) = cof;   // adjugate transposes
    }
  return adj.shifted(-d).scaled(LaurentPoly::constant(p_, cinv));
}

std::string LaurentMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  return os.str();
}

namespace {

// divide a by b in k[x] (both polynomial, b != 0): a = q b + r, deg r < deg b
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  Fp f(a.p());
  LaurentPoly q(a.p()), r = a;
  Fel lead_inv = f.inv(b.coeff(b.hi()));
  while (!r.is_zero() && r.hi() >= b.hi()) {
    int d = r.hi() - b.hi();
    Fel c = f.mul(r.coeff(r.hi()), lead_inv);
    q.set(d, (q.coeff(d) + c) % a.p());
    r = r - b.shifted(d).scaled(c);
  }
  return {q, r};
}

}  // namespace

std::vector<LaurentPoly> smith_invariants_kx(const LaurentMatrix& m) {
  if (!m.entries_polynomial()) throw InputError("smith: entries must be polynomial");
  Fp f(m.p());
  LaurentMatrix a = m;
  std::size_t n = std::min(a.rows(), a.cols());
  std::vector<LaurentPoly> inv;
  std::size_t top = 0;
  while (top < n) {
    int best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = top; i < a.rows(); ++i)
      for (std::size_t j = top; j < a.cols(); ++j)
        if (!a.at(i, j).is_zero() && (best < 0 || a.at(i, j).hi() < best)) {
          best = a.at(i, j).hi();
          bi = i;
          bj = j;
        }
    if (best < 0) break;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(top, j), a.at(bi, j));
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, top), a.at(i, bj));
    bool clean = true;
    for (std::size_t i = top + 1; i < a.rows(); ++i) {
      if (a.at(i, top).is_zero()) continue;
      auto [q, r] = poly_divmod(a.at(i, top), a.at(top, top));
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - q * a.at(top, j);
      if (!r.is_zero()) clean = false;
    }
    for (std::size_t j = top + 1; j < a.cols(); ++j) {
      if (a.at(top, j).is_zero()) continue;
      auto [q, r] = poly_divmod(a.at(top, j), a.at(top, top));
      for (std::size_t i = 0; i < a.rows(); ++i)
        a.at(i, j) = a.at(i, j) - a.at(i, top) * q;
      if (!r.is_zero()) clean = false;
    }
    if (!clean) continue;   // degrees dropped; run the corner again
    bool done = true;
    for (std::size_t i = top + 1; i < a.rows() && done; ++i)
      if (!a.at(i, top).is_zero()) done = false;
    for (std::size_t j = top + 1; j < a.cols() && done; ++j)
      if (!a.at(top, j).is_zero()) done = false;
    if (!done) continue;
    LaurentPoly piv = a.at(top, top);
    inv.push_back(piv.scaled(f.inv(piv.coeff(piv.hi()))));
    ++top;
  }
  return inv;
}

}  // namespace phantomlab
