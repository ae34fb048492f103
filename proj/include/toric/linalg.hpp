#pragma once

// Dense exact linear algebra over Q.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Incrementally maintained row space with fully reduced pivot rows.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v; returns true iff v was independent of the rows so far.
  bool insert(RationalVector v);
  /// True iff v lies in the span.
  bool contains(RationalVector v) const;

 private:
  void reduce(RationalVector& v) const;

  std::size_t width_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

struct EchelonForm {
  RationalMatrix rows;              // reduced rows, pivot entry 1
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form where pivot columns are searched in
/// `column_priority` order (e.g. right-to-left). Zero rows are dropped.
EchelonForm reduced_echelon(RationalMatrix m, const std::vector<std::size_t>& column_priority);

std::size_t rank(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

}  // namespace toric
