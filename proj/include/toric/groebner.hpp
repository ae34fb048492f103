#pragma once

// Buchberger's algorithm, normal forms and graded dimension counts for
// homogeneous ideals.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// Reduced Groebner basis: monic, inter-reduced, sorted by ascending leading
/// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> gens)
      : nvars_(nvars), order_(order), gens_(std::move(gens)) {}

  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  std::vector<Monomial> leading_monomials() const;
  /// True iff no leading monomial divides m.
  bool is_standard(const Monomial& m) const;
  /// Ideal membership.
  bool contains(const Polynomial& p) const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
};

/// Full division remainder: no term of the result is divisible by a leading
/// monomial of `gb`.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Buchberger with the normal selection strategy and the coprime-leading-term
/// criterion. Zero generators are ignored.
GroebnerBasis buchberger(std::span<const Polynomial> gens, std::size_t nvars,
                         MonomialOrder order = MonomialOrder::kGrevlex);

/// Standard monomials of degree k in descending grevlex order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int k);

/// Entry k = number of standard monomials of degree k, for k = 0..up_to.
std::vector<long> hilbert_function(const GroebnerBasis& gb, int up_to);

/// dim_Q of the degree-k slice of the ideal generated by `gens`.
long graded_ideal_dimension(std::span<const Polynomial> gens, std::size_t nvars, int k);

/// If every variable has a pure power among the leading monomials, the
/// quotient is finite-dimensional and vanishes above the returned degree
/// (sum of (e_i - 1)). Otherwise nullopt.
std::optional<int> quotient_degree_bound(const GroebnerBasis& gb);

/// Last degree with a nonzero Hilbert value, for finite-dimensional quotients.
std::optional<int> socle_degree(const GroebnerBasis& gb);

}  // namespace toric
