#include "toric/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "toric/fan.hpp"

namespace toric {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Bareiss fraction-free elimination; destroys `m`.
Integer bareiss_det(IntRows m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::zero(std::size_t dim) { return LatticeVector(std::vector<Integer>(dim, Integer(0))); }

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t axis) {
  LatticeVector v = zero(dim);
  v.coords_.at(axis) = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("lattice vector dimension mismatch");
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.coords_[i] += other.coords_[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const { return *this + (-other); }

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Integer det(std::span<const LatticeVector> vs) {
  const std::size_t n = vs.size();
  IntRows m(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (vs[j].dim() != n) throw std::invalid_argument("det: expected " + std::to_string(n) + " vectors of length " + std::to_string(n));
  }
  // det(A) = det(A^T), so the vectors can be used as rows directly.
  for (std::size_t i = 0; i < n; ++i) m[i] = vs[i].coords();
  return bareiss_det(std::move(m));
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool is_primitive(const LatticeVector& v) {
  if (v.is_zero()) throw std::invalid_argument("is_primitive: zero vector");
  return content(v) == 1;
}

UnimodularMatrix::UnimodularMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw std::invalid_argument("unimodular matrix must be square");
  }
  Integer d = bareiss_det(rows_);
  if (abs(d) != 1) throw std::invalid_argument("matrix is not unimodular (det = " + d.get_str() + ")");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  IntRows rows(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return UnimodularMatrix(std::move(rows), Unchecked{});
}

UnimodularMatrix UnimodularMatrix::from_columns(std::span<const LatticeVector> columns) {
  const std::size_t n = columns.size();
  IntRows rows(n, std::vector<Integer>(n));
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].dim() != n) throw std::invalid_argument("from_columns: dimension mismatch");
    for (std::size_t r = 0; r < n; ++r) rows[r][c] = columns[c][r];
  }
  return UnimodularMatrix(std::move(rows));
}

UnimodularMatrix UnimodularMatrix::to_standard_basis(std::span<const LatticeVector> basis) {
  return from_columns(basis).inverse();
}

Integer UnimodularMatrix::det() const { return bareiss_det(rows_); }

UnimodularMatrix UnimodularMatrix::inverse() const {
  // Gauss-Jordan over Q; every entry of the inverse is an integer since det = +-1.
  const std::size_t n = dim();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows_[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  IntRows out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j].get_num();
  }
  return UnimodularMatrix(std::move(out), Unchecked{});
}

LatticeVector UnimodularMatrix::apply(const LatticeVector& v) const {
  if (v.dim() != dim()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Integer> out(dim(), Integer(0));
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < dim(); ++c) out[r] += rows_[r][c] * v[c];
  }
  return LatticeVector(std::move(out));
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("matrix product: dimension mismatch");
  const std::size_t n = dim();
  IntRows out(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += rows_[i][k] * other.rows_[k][j];
  return UnimodularMatrix(std::move(out), Unchecked{});
}

std::string UnimodularMatrix::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) os << ',';
    os << LatticeVector(rows_[r]).to_string();
  }
  os << ')';
  return os.str();
}

Fan apply_unimodular(const UnimodularMatrix& u, const Fan& f) {
  if (u.dim() != static_cast<std::size_t>(f.dim)) throw std::invalid_argument("apply_unimodular: dimension mismatch");
  Fan out = f;
  for (auto& r : out.rays) r = u.apply(r);
  return out;
}

}  // namespace toric
