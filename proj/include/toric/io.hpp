#pragma once

// JSON serialization of fans and reports. Integers that count things are JSON
// numbers; every rational (coefficients, pairing entries) is a string "p" or
// "p/q". Ray coordinates are JSON integers, or decimal strings when they do
// not fit in 64 bits.

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "toric/classify.hpp"
#include "toric/cohomology.hpp"
#include "toric/ellipticity.hpp"
#include "toric/fan.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "toric-report/1";

/// Strict parse of {"dim": N, "rays": [[...], ...], "max_cones": [[...], ...]}:
/// all three keys required, no others allowed. Throws ParseError. The result
/// is not validated geometrically.
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f);

/// Reads a fan file; throws ParseError on I/O or syntax errors.
Fan read_fan_file(const std::string& path);
Fan parse_fan(std::istream& in);

Json validation_json(const ValidationReport& r);
Json smoothness_json(const SmoothnessResult& r);
Json completeness_json(const CompletenessResult& r);
Json covering_json(const CoveringCheck& c);

Json presentation_json(const GradedPresentation& p);
Json rational_matrix_json(const RationalMatrix& m);
/// Betti numbers, Poincare coefficients, Euler characteristic, presentations,
/// Groebner basis and all cup pairings.
Json cohomology_json(const CohomologyReport& r);
Json certificate_json(const EllipticityCertificate& c);
Json classification_json(const ClassificationResult& r);
Json sweep_row_json(const SweepRow& r);
Json sweep_json(const SweepSummary& s);
Json catalog_entry_json(const CatalogEntry& e);

/// Tab-separated table of a sweep, one row per instance with a header line.
void write_sweep_tsv(const SweepSummary& s, std::ostream& out);

/// Human-readable rendering of a JSON document: one "key: value" line per
/// scalar, nested objects indented, scalar arrays on one line. Carries exactly
/// the JSON's content.
void render_text(const Json& j, std::ostream& out);

}  // namespace toric
