#pragma once

// Exact integer linear algebra on lattice vectors.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector zero(std::size_t dim);
  static LatticeVector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates; vectors of different length compare by length first.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

/// Determinant of the square matrix whose columns are `vs`. Fraction-free
/// Bareiss elimination; throws std::invalid_argument unless there are exactly
/// N vectors of length N.
Integer det(std::span<const LatticeVector> vs);

/// gcd of the coordinates (non-negative).
Integer content(const LatticeVector& v);

/// True iff the coordinates are coprime. Throws std::invalid_argument on the zero vector.
bool is_primitive(const LatticeVector& v);

/// Square integer matrix with determinant +1 or -1.
class UnimodularMatrix {
 public:
  /// Throws std::invalid_argument if the rows are ragged, not square, or the
  /// determinant is not +-1.
  explicit UnimodularMatrix(std::vector<std::vector<Integer>> rows);

  static UnimodularMatrix identity(std::size_t n);
  /// Matrix with the given vectors as columns (must form a lattice basis).
  static UnimodularMatrix from_columns(std::span<const LatticeVector> columns);
  /// The unique U with U * basis[i] = e_i. Throws std::invalid_argument if
  /// `basis` is not a lattice basis.
  static UnimodularMatrix to_standard_basis(std::span<const LatticeVector> basis);

  std::size_t dim() const { return rows_.size(); }
  const Integer& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  Integer det() const;
  UnimodularMatrix inverse() const;
  LatticeVector apply(const LatticeVector& v) const;

  UnimodularMatrix operator*(const UnimodularMatrix& other) const;
  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) { return a.rows_ == b.rows_; }

  std::string to_string() const;

 private:
  struct Unchecked {};
  UnimodularMatrix(std::vector<std::vector<Integer>> rows, Unchecked) : rows_(std::move(rows)) {}

  std::vector<std::vector<Integer>> rows_;
};

struct Fan;

/// Replaces every ray v by U v; maximal cones are kept as index sets.
/// Throws std::invalid_argument on a dimension mismatch.
Fan apply_unimodular(const UnimodularMatrix& u, const Fan& f);

}  // namespace toric
