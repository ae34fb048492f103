#pragma once

// Rational cohomology of a smooth complete toric variety from its fan:
// Stanley-Reisner relations plus linear relations, elimination of the
// linear part, Betti numbers and the cup-product pairing.

#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/groebner.hpp"
#include "toric/linalg.hpp"
#include "toric/polynomial.hpp"

namespace toric {

enum class PresentationForm { kFull, kReduced };

/// Q[variables]/(generators), each variable in cohomological degree 2.
struct GradedPresentation {
  PresentationForm form = PresentationForm::kFull;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
  /// Reduced form only: substitution[i] expresses D_{i+1} as a linear form in
  /// the surviving variables.
  std::vector<Polynomial> substitution;
  /// Reduced form only: indices of the rays whose D-variables survive.
  std::vector<int> survivors;

  std::size_t nvars() const { return variables.size(); }
  std::vector<std::string> generator_strings() const;
};

/// Variables D1..Dd; one squarefree monomial per minimal non-face, then the
/// N linear forms sum_i (v_i)_j D_i. Throws unless `f` is valid, smooth and
/// complete.
GradedPresentation build_presentation(const Fan& f);

/// Eliminates the linear generators by Gaussian elimination, pivoting on the
/// highest-index variables first. Survivors are renamed x, y, z, ... in index
/// order. Throws GeometryError if the linear forms do not have full rank.
GradedPresentation eliminate_linear(const GradedPresentation& full);

struct CohomologyReport {
  int dim = 0;      // N
  int num_rays = 0; // d
  int b2 = 0;
  std::vector<long> betti;     // b_{2k}, k = 0..N
  std::vector<long> poincare;  // coefficient of t^j, j = 0..2N (odd entries zero)
  long euler = 0;
  int socle_degree = 0;  // algebraic; cohomological degree is twice this
  GradedPresentation full;
  GradedPresentation reduced;
  GroebnerBasis reduced_basis{0, MonomialOrder::kGrevlex, {}};
  std::size_t num_max_cones = 0;
};

/// build_presentation -> eliminate_linear -> buchberger -> hilbert_function,
/// then checks b_0 = b_{2N} = 1, Poincare duality and chi = #maximal cones
/// (ConsistencyError on failure).
CohomologyReport cohomology_report(const Fan& f);

/// Hilbert function of a presentation up to `up_to` (algebraic degrees).
std::vector<long> presentation_hilbert_function(const GradedPresentation& p, int up_to);

/// Pairing H^{2k} x H^{2(top-k)} -> Q on standard-monomial bases: entry (i,j)
/// is the coefficient of the top-degree standard monomial in NF(m_i m_j).
RationalMatrix cup_pairing(const GroebnerBasis& gb, int top_degree, int k);
RationalMatrix cup_pairing(const CohomologyReport& report, int k);

/// Determinant of the middle pairing of a surface, as a squarefree integer
/// representative of Q*/(Q*)^2. Requires N = 2 and b2 <= 2; throws
/// ConsistencyError if the pairing is degenerate.
Integer intersection_discriminant(const CohomologyReport& report);

/// Squarefree integer in the class of q modulo nonzero rational squares.
Integer squarefree_class(const Rational& q);

}  // namespace toric
