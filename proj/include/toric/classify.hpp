#pragma once

// Recognition of smooth complete fans of dimension <= 3 as members of the
// catalog families, bounded enumeration of surfaces, and parameter sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/ellipticity.hpp"
#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

enum class FamilyTag {
  kCP1,
  kCP2,
  kCP3,
  kHirzebruch,
  kBundleOverCP2,
  kBundleOverCP1,
  kCP1BundleOverHirzebruch,
  kCaseII,
  kUnclassified,
};

const char* to_string(FamilyTag tag);

/// relabel_rays(apply_unimodular(transform, f), relabel) equals the catalog
/// fan (catalog_name, catalog_params) ray for ray, with the same cone set.
struct ClassificationWitness {
  UnimodularMatrix transform = UnimodularMatrix::identity(1);
  std::vector<int> relabel;  // input ray i -> catalog ray relabel[i]
  std::string catalog_name;
  std::vector<long> catalog_params;
};

struct ClassificationResult {
  FamilyTag tag = FamilyTag::kUnclassified;
  /// Reported parameters: |b| for Hirzebruch, the catalog parameters otherwise
  /// (for case II the family index k comes first).
  std::vector<long> params;
  std::optional<ClassificationWitness> witness;
  Verdict verdict = Verdict::kHyperbolic;

  /// e.g. "Hirzebruch(3)", "CaseII(2; 1,-1)", "Unclassified".
  std::string label() const;
};

Fan apply_witness(const Fan& f, const ClassificationWitness& w);

/// Requires a valid, smooth, complete fan. Dimension 1 is CP1; dimension 2
/// matches CP2 and Hirzebruch surfaces; dimension 3 matches by b2 against the
/// b2 <= 3 families; everything else (including dimension >= 4) is
/// Unclassified. Among all matches the smallest (family, |params|, signs) key
/// wins, so the result does not depend on the presentation of `f`.
ClassificationResult classify(const Fan& f);

/// classify without the ellipticity computation; `verdict` is left at its
/// default.
ClassificationResult classify_structure(const Fan& f);

/// Canonical representative of a smooth complete 2-dimensional fan: over all
/// rotations and reflections of the ray cycle, map the first two rays to
/// e1, e2 and keep the lexicographically smallest tail. Rays are returned in
/// cyclic order with consecutive cones.
Fan canonical_form_dim2(const Fan& f);

/// All smooth complete 2-dimensional fans with 3 <= rays <= max_rays whose
/// canonical coordinates are bounded by coord_bound in absolute value, one per
/// GL(2,Z) orbit, sorted by ray count then coordinates.
std::vector<Fan> enumerate_dim2(int max_rays, long coord_bound, int jobs = 1);

struct ParamRange {
  long lo = 0;
  long hi = 0;
};

struct SweepRow {
  std::string family;
  std::vector<long> params;
  Verdict verdict = Verdict::kHyperbolic;
  bool prefiltered = false;
  std::vector<long> poincare;
  std::vector<int> betas;
  std::vector<int> mu;
  int mu_total = 0;
  std::string classification;
  std::optional<bool> display_match;
  std::vector<std::string> failures;  // empty when the instance agrees with expectations
  std::string error;                  // set when the pipeline threw
};

struct SweepSummary {
  std::string family;
  std::vector<SweepRow> rows;
  int elliptic = 0;
  int hyperbolic = 0;
  int failures = 0;
};

/// Instantiates `family` on every tuple of the ranges (one range per
/// parameter, or a single range applied to every parameter) and runs the
/// full pipeline. "case2" sweeps families 1-5 over the range plus the five
/// isolated triples; "case2:k" sweeps one family. Tuples rejected by the
/// catalog are skipped. Rows are sorted by (family, params).
SweepSummary sweep(const std::string& family, const std::vector<ParamRange>& ranges, int jobs = 1);

/// Runs the pipeline on one catalog entry and compares against expectations.
SweepRow evaluate_entry(const CatalogEntry& entry);

}  // namespace toric
