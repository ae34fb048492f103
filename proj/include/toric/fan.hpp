#pragma once

// Fan data model: validation, smoothness, completeness, non-faces and the
// two constructions (products, star subdivisions) used by the catalog.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A maximal cone as 0-based ray indices, in the order given by the input.
using Cone = std::vector<int>;

struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<Cone> max_cones;

  std::size_t num_rays() const { return rays.size(); }
  std::size_t num_cones() const { return max_cones.size(); }

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Same rays in the same order and the same maximal cones as sets of index sets.
bool same_fan(const Fan& a, const Fan& b);

enum class ViolationKind {
  kBadDimension,
  kRayLength,
  kZeroRay,
  kNonPrimitiveRay,
  kDuplicateRay,
  kConeSize,
  kIndexOutOfRange,
  kRepeatedIndex,
  kNestedCone,
  kUnusedRay,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int index;  // offending ray or cone index (-1 when not applicable)
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Fan& f);

struct SmoothnessResult {
  bool smooth = true;
  std::optional<std::size_t> cone_index;  // first cone with |det| != 1
  Cone cone;
  Integer det;
};

SmoothnessResult is_smooth(const Fan& f);

enum class CompletenessFailure {
  kNone,
  kTooFewRays,
  kDegenerateCone,
  kWallMultiplicity,
  kWallSameSide,
  kDisconnected,
  kOverlap,
};

struct CompletenessResult {
  bool complete = true;
  CompletenessFailure reason = CompletenessFailure::kNone;
  std::vector<int> wall;  // sorted; set for wall failures
  std::optional<std::size_t> cone_index;
  std::string message;
};

/// Exact completeness test for full-dimensional simplicial fans: every wall
/// lies in exactly two maximal cones which sit on opposite sides of it, the
/// wall-adjacency graph is connected, and the interior point (sum of rays) of
/// each maximal cone lies in no other maximal cone. The last two conditions
/// rule out pseudo-fans that wrap around the origin more than once.
CompletenessResult is_complete(const Fan& f);

struct CoveringCheck {
  bool ok = true;
  int samples = 0;
  std::uint64_t seed = 0;
  std::optional<LatticeVector> uncovered;
};

/// Randomized cross-check of completeness: draws random lattice points and
/// checks membership in some maximal cone by exact solves over each cone's
/// basis. Deterministic for a given seed.
CoveringCheck random_covering_check(const Fan& f, int samples, std::uint64_t seed);

/// True iff `point` lies in the closed cone spanned by rays of `cone`
/// (which must be a basis of Q^N).
bool cone_contains(const Fan& f, const Cone& cone, const LatticeVector& point);

struct NonFace {
  std::vector<int> indices;  // sorted

  friend bool operator==(const NonFace&, const NonFace&) = default;
  friend bool operator<(const NonFace& a, const NonFace& b) { return a.indices < b.indices; }
};

/// True iff the index set is contained in some maximal cone.
bool is_face(const Fan& f, std::span<const int> indices);

/// Minimal non-faces, sorted lexicographically. Requires at most 64 rays.
std::vector<NonFace> minimal_non_faces(const Fan& f);

/// Fan of the product variety: rays of `f` then rays of `g`, padded with zeros.
Fan product(const Fan& f, const Fan& g);

/// Inserts the ray sum of `cone` and replaces `cone` by the N cones obtained
/// by swapping in the new ray for each original ray. Throws
/// std::invalid_argument if `cone` is not a maximal cone of `f`.
Fan star_subdivide(const Fan& f, const Cone& cone);

/// Ray i of `f` becomes ray perm[i] of the result; cones are rewritten.
Fan relabel_rays(const Fan& f, std::span<const int> perm);

/// Throws InvalidFanError or GeometryError unless `f` is valid, smooth, complete.
void require_smooth_complete(const Fan& f);

}  // namespace toric
