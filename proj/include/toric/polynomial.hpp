#pragma once

// Multivariate polynomials with exact rational coefficients.
//
// Every variable has algebraic degree 1. Cohomology reports double degrees
// on output; nothing in this header knows about that.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace toric {

using Rational = mpq_class;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// True iff the supports are disjoint.
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Storage order only (lexicographic on exponent vectors). Use compare() for
  /// monomial orders.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class MonomialOrder { kGrevlex, kLex };

const char* to_string(MonomialOrder order);

/// Total order on monomials of equal arity. Variables are ordered by index
/// (variable 0 largest).
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// All monomials of the given total degree, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m; zero results are pruned.
  void add_term(const Monomial& m, const Rational& c);

  /// Highest total degree among the terms (-1 for zero).
  int degree() const;
  bool is_homogeneous() const;

  const Monomial& leading_monomial(MonomialOrder order) const;
  const Rational& leading_coefficient(MonomialOrder order) const;
  Polynomial monic(MonomialOrder order) const;

  /// Replaces variable i by images[i]; all images must share one arity.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(long c, Polynomial p) { return p *= Rational(c); }
  friend Polynomial operator*(const Monomial& m, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms in descending `order`, explicit rational coefficients, e.g.
  /// "x^2 - 3/2*x*y + y^2".
  std::string to_string(const std::vector<std::string>& names, MonomialOrder order = MonomialOrder::kGrevlex) const;

 private:
  void check_arity(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// x, y, z, w, u, v, s, t, then x9, x10, ...
std::vector<std::string> default_variable_names(std::size_t n);

/// Rational as "p" or "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace toric
