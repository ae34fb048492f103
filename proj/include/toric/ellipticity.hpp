#pragma once

// Elliptic/hyperbolic decision for smooth complete toric varieties.
//
// The cohomology ring is evenly graded and generated in degree 2, so the
// variety is elliptic exactly when the reduced ideal is a complete
// intersection: its minimal number of generators equals the number of
// variables n = b2. For a finite-dimensional graded quotient, n homogeneous
// generators in n variables automatically form a regular sequence, so a
// minimal generating set of size n is itself the certificate.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/fan.hpp"
#include "toric/groebner.hpp"

namespace toric {

enum class Verdict { kElliptic, kHyperbolic };

const char* to_string(Verdict v);

struct MinimalGenerators {
  /// counts[k-1] = mu_k, the number of minimal generators in algebraic degree k,
  /// for k = 1 .. first degree where the quotient vanishes.
  std::vector<int> counts;
  int total = 0;
  /// Explicit minimal generating set, degree by degree; input generators are
  /// preferred.
  std::vector<Polynomial> generators;
  GroebnerBasis basis{0, MonomialOrder::kGrevlex, {}};
};

/// mu_k = dim I_k - dim(R_1 I_{k-1}) by exact rank computations. Requires a
/// proper homogeneous ideal whose quotient is finite-dimensional and vanishes
/// by `degree_cap` (if given); throws ConsistencyError otherwise.
MinimalGenerators minimal_generator_counts(std::span<const Polynomial> gens, std::size_t nvars,
                                           std::optional<int> degree_cap = std::nullopt);

/// True iff mu(I) equals the number of variables. Throws std::invalid_argument
/// if the presentation still has linear generators.
bool is_complete_intersection(const GradedPresentation& reduced);

/// Exponents beta_i with P(t) (1-t^2)^n = prod (1 - t^{2 beta_i}), ascending.
/// `poincare` is indexed by cohomological degree. Throws std::domain_error if
/// P is not of that form.
std::vector<int> peel_exponents(const std::vector<long>& poincare, int n);

/// Coefficients (algebraic degrees 0..up_to) of prod (1 - s^b) / (1 - s)^n.
std::vector<long> product_hilbert_series(const std::vector<int>& betas, int up_to);

struct EllipticityCertificate {
  Verdict verdict = Verdict::kHyperbolic;
  int dim = 0;  // N
  int n = 0;    // b2
  bool prefiltered = false;

  std::vector<int> mu;  // mu[k-1] = mu_k, algebraic degree k
  int mu_total = 0;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;  // minimal generating set

  // Elliptic only.
  std::vector<int> betas;              // ascending
  std::vector<int> generator_degrees;  // 2 beta_i
  std::vector<int> alphas;             // always 1: generators sit in degree 2
  std::optional<int> pi_even;
  std::optional<int> pi_odd;

  // Hyperbolic only (not set when prefiltered): smallest algebraic degree
  // where the cumulative generator count exceeds n.
  std::optional<int> excess_degree;

  std::optional<CohomologyReport> report;
};

struct CertifyOptions {
  /// b2 > N forces hyperbolic without any Groebner work.
  bool prefilter = true;
  std::optional<int> degree_cap;
};

/// Full pipeline. Elliptic certificates are cross-checked (peeled exponents
/// match generator degrees, sum(beta_i - 1) = N, Hilbert series identity);
/// a mismatch raises ConsistencyError.
EllipticityCertificate certify(const Fan& f, const CertifyOptions& options = {});

}  // namespace toric
