#include "toric/fan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << '}';
  return os.str();
}

std::vector<int> sorted(Cone c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<LatticeVector> cone_rays(const Fan& f, const Cone& cone) {
  std::vector<LatticeVector> out;
  out.reserve(cone.size());
  for (int i : cone) out.push_back(f.rays.at(i));
  return out;
}

}  // namespace

bool same_fan(const Fan& a, const Fan& b) {
  if (a.dim != b.dim || a.rays != b.rays || a.max_cones.size() != b.max_cones.size()) return false;
  std::set<std::vector<int>> ca, cb;
  for (const auto& c : a.max_cones) ca.insert(sorted(c));
  for (const auto& c : b.max_cones) cb.insert(sorted(c));
  return ca == cb;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadDimension: return "bad dimension";
    case ViolationKind::kRayLength: return "ray length != N";
    case ViolationKind::kZeroRay: return "zero ray";
    case ViolationKind::kNonPrimitiveRay: return "non-primitive ray";
    case ViolationKind::kDuplicateRay: return "duplicate ray";
    case ViolationKind::kConeSize: return "cone size != N";
    case ViolationKind::kIndexOutOfRange: return "ray index out of range";
    case ViolationKind::kRepeatedIndex: return "repeated index in cone";
    case ViolationKind::kNestedCone: return "cone contained in another cone";
    case ViolationKind::kUnusedRay: return "ray in no maximal cone";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ValidationReport validate(const Fan& f) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, int index, const std::string& detail) {
    std::string msg = to_string(kind);
    if (!detail.empty()) msg += " (" + detail + ")";
    report.violations.push_back({kind, index, msg});
  };

  if (f.dim < 1) {
    add(ViolationKind::kBadDimension, -1, "dim = " + std::to_string(f.dim));
    return report;
  }
  const auto n = static_cast<std::size_t>(f.dim);

  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const auto& r = f.rays[i];
    const int idx = static_cast<int>(i);
    if (r.dim() != n) {
      add(ViolationKind::kRayLength, idx, "ray " + std::to_string(i) + " has length " + std::to_string(r.dim()));
      continue;
    }
    if (r.is_zero()) {
      add(ViolationKind::kZeroRay, idx, "ray " + std::to_string(i));
    } else if (!is_primitive(r)) {
      add(ViolationKind::kNonPrimitiveRay, idx, "ray " + std::to_string(i) + " = " + r.to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (f.rays[j] == r) {
        add(ViolationKind::kDuplicateRay, idx, "ray " + std::to_string(i) + " repeats ray " + std::to_string(j));
        break;
      }
    }
  }

  std::vector<bool> used(f.rays.size(), false);
  std::vector<std::set<int>> cone_sets;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    const int idx = static_cast<int>(c);
    if (cone.size() != n) {
      add(ViolationKind::kConeSize, idx,
          "cone " + std::to_string(c) + " has " + std::to_string(cone.size()) + " rays, N = " + std::to_string(n));
    }
    std::set<int> s;
    for (int i : cone) {
      if (i < 0 || static_cast<std::size_t>(i) >= f.rays.size()) {
        add(ViolationKind::kIndexOutOfRange, idx, "cone " + std::to_string(c) + " index " + std::to_string(i));
        continue;
      }
      if (!s.insert(i).second) add(ViolationKind::kRepeatedIndex, idx, "cone " + std::to_string(c) + " index " + std::to_string(i));
      used[i] = true;
    }
    cone_sets.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < cone_sets.size(); ++a) {
    for (std::size_t b = 0; b < cone_sets.size(); ++b) {
      if (a == b) continue;
      // Report equal cones once (on the later index).
      if (cone_sets[a] == cone_sets[b] && a < b) continue;
      if (std::includes(cone_sets[b].begin(), cone_sets[b].end(), cone_sets[a].begin(), cone_sets[a].end())) {
        add(ViolationKind::kNestedCone, static_cast<int>(a),
            "cone " + std::to_string(a) + " inside cone " + std::to_string(b));
        break;
      }
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) add(ViolationKind::kUnusedRay, static_cast<int>(i), "ray " + std::to_string(i));
  }
  return report;
}

SmoothnessResult is_smooth(const Fan& f) {
  SmoothnessResult res;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    auto rays = cone_rays(f, f.max_cones[c]);
    Integer d = det(rays);
    if (abs(d) != 1) {
      res.smooth = false;
      res.cone_index = c;
      res.cone = f.max_cones[c];
      res.det = d;
      return res;
    }
  }
  return res;
}

bool cone_contains(const Fan& f, const Cone& cone, const LatticeVector& point) {
  // Cramer: point = sum lambda_i r_i with lambda_i = det_i / det.
  auto rays = cone_rays(f, cone);
  const Integer d = det(rays);
  if (d == 0) throw std::invalid_argument("cone_contains: degenerate cone");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    auto replaced = rays;
    replaced[i] = point;
    if (sgn(det(replaced)) * sgn(d) < 0) return false;
  }
  return true;
}

CompletenessResult is_complete(const Fan& f) {
  CompletenessResult res;
  auto fail = [&](CompletenessFailure why, std::string msg) {
    res.complete = false;
    res.reason = why;
    res.message = std::move(msg);
    return res;
  };
  const auto n = static_cast<std::size_t>(f.dim);
  if (f.rays.size() < n + 1) return fail(CompletenessFailure::kTooFewRays, "fewer than N+1 rays");

  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    if (det(cone_rays(f, f.max_cones[c])) == 0) {
      res.cone_index = c;
      return fail(CompletenessFailure::kDegenerateCone, "cone " + join(f.max_cones[c]) + " is not full-dimensional");
    }
  }

  // wall -> list of (cone index, ray of the cone not on the wall)
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> walls;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto cone = sorted(f.max_cones[c]);
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<int> wall;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != skip) wall.push_back(cone[k]);
      walls[wall].emplace_back(c, cone[skip]);
    }
  }

  std::vector<std::vector<std::size_t>> adjacency(f.max_cones.size());
  for (const auto& [wall, cones] : walls) {
    if (cones.size() != 2) {
      res.wall = wall;
      return fail(CompletenessFailure::kWallMultiplicity,
                  "wall " + join(wall) + " lies in " + std::to_string(cones.size()) + " maximal cone(s)");
    }
    std::vector<LatticeVector> vs;
    for (int i : wall) vs.push_back(f.rays[i]);
    vs.push_back(f.rays[cones[0].second]);
    const int s0 = sgn(det(vs));
    vs.back() = f.rays[cones[1].second];
    const int s1 = sgn(det(vs));
    if (s0 * s1 >= 0) {
      res.wall = wall;
      return fail(CompletenessFailure::kWallSameSide, "cones on wall " + join(wall) + " lie on the same side");
    }
    adjacency[cones[0].first].push_back(cones[1].first);
    adjacency[cones[1].first].push_back(cones[0].first);
  }

  std::vector<bool> seen(f.max_cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    for (auto nb : adjacency[c]) {
      if (!seen[nb]) {
        seen[nb] = true;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  if (reached != f.max_cones.size()) return fail(CompletenessFailure::kDisconnected, "wall-adjacency graph is disconnected");

  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    LatticeVector centre = LatticeVector::zero(n);
    for (int i : f.max_cones[c]) centre = centre + f.rays[i];
    for (std::size_t o = 0; o < f.max_cones.size(); ++o) {
      if (o != c && cone_contains(f, f.max_cones[o], centre)) {
        res.cone_index = c;
        return fail(CompletenessFailure::kOverlap,
                    "cones " + join(f.max_cones[c]) + " and " + join(f.max_cones[o]) + " overlap");
      }
    }
  }
  return res;
}

CoveringCheck random_covering_check(const Fan& f, int samples, std::uint64_t seed) {
  CoveringCheck out;
  out.samples = samples;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int s = 0; s < samples; ++s) {
    LatticeVector p = LatticeVector::zero(static_cast<std::size_t>(f.dim));
    do {
      for (std::size_t i = 0; i < p.dim(); ++i) p[i] = coord(rng);
    } while (p.is_zero());
    bool covered = false;
    for (const auto& cone : f.max_cones) {
      if (cone_contains(f, cone, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      out.ok = false;
      out.uncovered = p;
      return out;
    }
  }
  return out;
}

bool is_face(const Fan& f, std::span<const int> indices) {
  for (const auto& cone : f.max_cones) {
    bool inside = std::all_of(indices.begin(), indices.end(),
                              [&](int i) { return std::find(cone.begin(), cone.end(), i) != cone.end(); });
    if (inside) return true;
  }
  return false;
}

std::vector<NonFace> minimal_non_faces(const Fan& f) {
  if (f.rays.size() > 64) throw std::invalid_argument("minimal_non_faces: more than 64 rays");
  std::unordered_set<std::uint64_t> faces;
  std::size_t max_size = 0;
  for (const auto& cone : f.max_cones) {
    max_size = std::max(max_size, cone.size());
    const std::size_t k = cone.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < k; ++b)
        if (sub >> b & 1) m |= std::uint64_t{1} << cone[b];
      faces.insert(m);
    }
  }
  // Every proper subset of a minimal non-face is a face, so a minimal
  // non-face is a face plus one ray; sizes are bounded by max_size + 1.
  std::set<std::uint64_t> found;
  const int d = static_cast<int>(f.rays.size());
  for (std::uint64_t face : faces) {
    if (static_cast<std::size_t>(std::popcount(face)) > max_size) continue;
    for (int j = 0; j < d; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (face & bit) continue;
      const std::uint64_t s = face | bit;
      if (faces.count(s)) continue;
      bool minimal = true;
      for (std::uint64_t rest = s; rest && minimal; rest &= rest - 1) {
        const std::uint64_t low = rest & (~rest + 1);
        if (!faces.count(s & ~low)) minimal = false;
      }
      if (minimal) found.insert(s);
    }
  }
  std::vector<NonFace> out;
  for (auto m : found) {
    NonFace nf;
    for (int i = 0; i < d; ++i)
      if (m >> i & 1) nf.indices.push_back(i);
    out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan product(const Fan& f, const Fan& g) {
  Fan out;
  out.dim = f.dim + g.dim;
  const auto n = static_cast<std::size_t>(out.dim);
  for (const auto& r : f.rays) {
    auto coords = r.coords();
    coords.resize(n, Integer(0));
    out.rays.emplace_back(std::move(coords));
  }
  for (const auto& r : g.rays) {
    std::vector<Integer> coords(static_cast<std::size_t>(f.dim), Integer(0));
    coords.insert(coords.end(), r.coords().begin(), r.coords().end());
    out.rays.emplace_back(std::move(coords));
  }
  const int shift = static_cast<int>(f.rays.size());
  for (const auto& cf : f.max_cones) {
    for (const auto& cg : g.max_cones) {
      Cone c = cf;
      for (int i : cg) c.push_back(i + shift);
      out.max_cones.push_back(std::move(c));
    }
  }
  return out;
}

Fan star_subdivide(const Fan& f, const Cone& cone) {
  const auto target = sorted(cone);
  auto it = std::find_if(f.max_cones.begin(), f.max_cones.end(), [&](const Cone& c) { return sorted(c) == target; });
  if (it == f.max_cones.end()) throw std::invalid_argument("star_subdivide: " + join(cone) + " is not a maximal cone");
  const auto pos = static_cast<std::size_t>(it - f.max_cones.begin());

  Fan out;
  out.dim = f.dim;
  out.rays = f.rays;
  LatticeVector sum = LatticeVector::zero(static_cast<std::size_t>(f.dim));
  for (int i : *it) sum = sum + f.rays.at(i);
  const int added = static_cast<int>(out.rays.size());
  out.rays.push_back(std::move(sum));

  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    if (c != pos) {
      out.max_cones.push_back(f.max_cones[c]);
      continue;
    }
    for (std::size_t k = 0; k < it->size(); ++k) {
      Cone replaced = *it;
      replaced[k] = added;
      out.max_cones.push_back(std::move(replaced));
    }
  }
  return out;
}

Fan relabel_rays(const Fan& f, std::span<const int> perm) {
  if (perm.size() != f.rays.size()) throw std::invalid_argument("relabel_rays: permutation size mismatch");
  Fan out;
  out.dim = f.dim;
  out.rays.resize(f.rays.size());
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int p = perm[i];
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || hit[p]) throw std::invalid_argument("relabel_rays: not a permutation");
    hit[p] = true;
    out.rays[p] = f.rays[i];
  }
  for (const auto& c : f.max_cones) {
    Cone nc;
    for (int i : c) nc.push_back(perm[i]);
    out.max_cones.push_back(std::move(nc));
  }
  return out;
}

void require_smooth_complete(const Fan& f) {
  auto report = validate(f);
  if (!report.ok()) throw InvalidFanError("invalid fan: " + report.summary());
  auto smooth = is_smooth(f);
  if (!smooth.smooth)
    throw GeometryError("not smooth: cone " + join(smooth.cone) + " has det " + smooth.det.get_str());
  auto complete = is_complete(f);
  if (!complete.complete) throw GeometryError("not complete: " + complete.message);
}

}  // namespace toric
