#pragma once

// Named smooth complete fans with known cohomology, and the data needed to
// compare a computed presentation against the expected algebra.

#include <optional>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/ellipticity.hpp"
#include "toric/fan.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Q[variables]/(generators) together with a linear identification of each
/// variable with a class in Q[D_1..D_d] (the full presentation's variables).
struct DisplayedAlgebra {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> identification;  // one linear form in D_1..D_d per variable

  std::vector<std::string> generator_strings() const;
  std::vector<std::string> identification_strings() const;
};

struct CatalogEntry {
  std::string family;
  std::vector<long> params;
  Fan fan;
  Verdict expected_verdict = Verdict::kElliptic;
  std::optional<std::vector<long>> expected_poincare;  // by cohomological degree
  std::optional<DisplayedAlgebra> display;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> param_names;
  std::string description;
};

/// Families accepted by `catalog`, in a fixed order.
const std::vector<FamilyInfo>& catalog_families();

/// Builds a catalog entry. Families and parameters:
///   cp N                  projective space, N >= 1
///   hirzebruch b          rays (1,0),(0,1),(-1,b),(0,-1)
///   surface4 a b          rays (1,0),(0,1),(-1,b),(a,-1), requires a*b = 0
///   bundle_cp2 c          P(O + O(c)) over CP^2
///   bundle_cp1 a b        P(O + O(a) + O(b)) over CP^1
///   case1 a b d           CP^1-bundle over a Hirzebruch surface
///   case2 k ...           k = 1,2: a b; k = 3,4,5: a; k = 6: n m p from the five isolated triples
///   cp_product N1 N2 ...  product of projective spaces
///   blowup_cpN N          CP^N blown up at a fixed point, N >= 2
///   blowup_cp2            same as blowup_cpN 2
///   blowup2_cp3           CP^3 blown up at two fixed points
/// Throws std::invalid_argument on an unknown name or bad parameters.
CatalogEntry catalog(const std::string& name, const std::vector<long>& params);

/// Parameter count of a family, or -1 if variable (cp_product).
int family_arity(const std::string& name, const std::vector<long>& params = {});

/// True iff the displayed algebra, pulled back along its identification and
/// the reduced presentation's substitution map, generates the same ideal as
/// the reduced presentation. False if the identification is not invertible.
bool display_matches(const DisplayedAlgebra& display, const GradedPresentation& reduced);

/// Family-6 triples (n,m,p) of the second b2 = 3 triangulation: solutions of
/// n(1+mp) - m = 1 in the box |n|,|m|,|p| <= bound whose matrix is not an
/// instance of families 1-5.
std::vector<std::vector<long>> isolated_case2_triples(long bound);

/// The five triples accepted by catalog("case2", {6, n, m, p}).
const std::vector<std::vector<long>>& case2_family6_triples();

/// Poincare polynomial coefficients (by cohomological degree) of the product
/// of CP^{beta_i - 1}.
std::vector<long> projective_product_poincare(const std::vector<int>& betas);

}  // namespace toric
