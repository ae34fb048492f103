#include "toric/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

void RowSpace::reduce(RationalVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
  }
}

bool RowSpace::insert(RationalVector v) {
  if (v.size() != width_) throw std::invalid_argument("RowSpace: width mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < width_ && v[piv] == 0) ++piv;
  if (piv == width_) return false;
  const Rational inv = 1 / v[piv];
  for (auto& x : v) x *= inv;
  // Keep existing rows reduced with respect to the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[piv];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::contains(RationalVector v) const {
  if (v.size() != width_) throw std::invalid_argument("RowSpace: width mismatch");
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

EchelonForm reduced_echelon(RationalMatrix m, const std::vector<std::size_t>& column_priority) {
  EchelonForm out;
  std::size_t next_row = 0;
  for (std::size_t col : column_priority) {
    std::size_t piv = next_row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[next_row]);
    auto& prow = m[next_row];
    const Rational inv = 1 / prow[col];
    for (auto& x : prow) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next_row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < prow.size(); ++j) m[r][j] -= f * prow[j];
    }
    out.pivots.push_back(col);
    ++next_row;
  }
  m.resize(next_row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  RowSpace space(m.front().size());
  for (const auto& row : m) space.insert(row);
  return space.rank();
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col].size() != n) throw std::invalid_argument("determinant: matrix is not square");
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

}  // namespace toric
