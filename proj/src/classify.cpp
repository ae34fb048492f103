#include "toric/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace toric {

namespace {

using Rays = std::vector<LatticeVector>;
using Reader = std::function<std::vector<Integer>(const Rays&)>;

struct Template {
  FamilyTag tag;
  int order;  // tie-break between families sharing a tag
  std::string catalog_name;
  std::vector<long> fixed;  // leading catalog parameters (the case II index)
  Fan shape;                // catalog instance providing the cone structure
  Reader read;
};

std::vector<Template> templates_for(int dim, int b2) {
  std::vector<Template> out;
  auto add = [&out](FamilyTag tag, int order, const std::string& name, std::vector<long> fixed,
                    const std::vector<long>& sample, Reader read) {
    std::vector<long> params = fixed;
    params.insert(params.end(), sample.begin(), sample.end());
    out.push_back({tag, order, name, std::move(fixed), catalog(name, params).fan, std::move(read)});
  };
  if (dim == 1 && b2 == 1) add(FamilyTag::kCP1, 0, "cp", {1}, {}, [](const Rays&) { return std::vector<Integer>{}; });
  if (dim == 2 && b2 == 1) add(FamilyTag::kCP2, 0, "cp", {2}, {}, [](const Rays&) { return std::vector<Integer>{}; });
  if (dim == 2 && b2 == 2)
    add(FamilyTag::kHirzebruch, 0, "hirzebruch", {}, {0}, [](const Rays& w) { return std::vector<Integer>{w[2][1]}; });
  if (dim == 3 && b2 == 1) add(FamilyTag::kCP3, 0, "cp", {3}, {}, [](const Rays&) { return std::vector<Integer>{}; });
  if (dim == 3 && b2 == 2) {
    add(FamilyTag::kBundleOverCP2, 0, "bundle_cp2", {}, {0}, [](const Rays& w) { return std::vector<Integer>{w[3][2]}; });
    add(FamilyTag::kBundleOverCP1, 0, "bundle_cp1", {}, {0, 0},
        [](const Rays& w) { return std::vector<Integer>{w[4][0], w[4][1]}; });
  }
  if (dim == 3 && b2 == 3) {
    add(FamilyTag::kCP1BundleOverHirzebruch, 0, "case1", {}, {0, 0, 0},
        [](const Rays& w) { return std::vector<Integer>{w[3][0], w[3][2], w[4][0]}; });
    add(FamilyTag::kCaseII, 1, "case2", {1}, {0, 0}, [](const Rays& w) { return std::vector<Integer>{w[3][0], w[3][2]}; });
    add(FamilyTag::kCaseII, 2, "case2", {2}, {0, 0}, [](const Rays& w) { return std::vector<Integer>{w[4][0], w[4][2]}; });
    add(FamilyTag::kCaseII, 3, "case2", {3}, {0}, [](const Rays& w) { return std::vector<Integer>{w[3][0]}; });
    add(FamilyTag::kCaseII, 4, "case2", {4}, {0}, [](const Rays& w) { return std::vector<Integer>{w[5][1]}; });
    add(FamilyTag::kCaseII, 5, "case2", {5}, {0}, [](const Rays& w) { return std::vector<Integer>{w[5][1]}; });
    add(FamilyTag::kCaseII, 6, "case2", {6}, {-1, 1, -3},
        [](const Rays& w) { return std::vector<Integer>{w[3][0], w[4][0], w[5][1]}; });
  }
  return out;
}

std::uint64_t cone_mask(const Cone& c, const std::vector<int>& map) {
  std::uint64_t m = 0;
  for (int i : c) m |= std::uint64_t{1} << map[static_cast<std::size_t>(i)];
  return m;
}

struct Match {
  // Selection key: family, then |params|, then sign pattern, then params.
  std::tuple<int, int, std::vector<long>, std::vector<int>, std::vector<long>> key;
  FamilyTag tag;
  std::vector<long> catalog_params;
  ClassificationWitness witness;
};

std::optional<std::vector<long>> to_longs(const std::vector<Integer>& xs) {
  std::vector<long> out;
  for (const auto& x : xs) {
    if (!x.fits_slong_p()) return std::nullopt;
    out.push_back(x.get_si());
  }
  return out;
}

// Exhaustive search over ray orderings consistent with the template's cone
// structure; the first N template rays are sent to the standard basis.
void match_template(const Fan& f, const Template& t, std::optional<Match>& best) {
  const std::size_t d = f.num_rays();
  if (t.shape.num_rays() != d || t.shape.dim != f.dim || t.shape.num_cones() != f.num_cones()) return;
  std::vector<int> identity(d);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::uint64_t> input_cones;
  for (const auto& c : f.max_cones) input_cones.insert(cone_mask(c, identity));

  std::vector<int> sigma(d);  // template ray j -> input ray sigma[j]
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (const auto& c : t.shape.max_cones) {
      if (!input_cones.count(cone_mask(c, sigma))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    Rays basis;
    for (int j = 0; j < f.dim; ++j) basis.push_back(f.rays[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])]);
    const UnimodularMatrix T = UnimodularMatrix::to_standard_basis(basis);
    Rays w;
    for (std::size_t j = 0; j < d; ++j) w.push_back(T.apply(f.rays[static_cast<std::size_t>(sigma[j])]));

    const auto read = to_longs(t.read(w));
    if (!read) continue;
    std::vector<long> params = t.fixed;
    params.insert(params.end(), read->begin(), read->end());
    CatalogEntry entry;
    try {
      entry = catalog(t.catalog_name, params);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (entry.fan.rays != w) continue;

    std::vector<long> abs_params, own(read->begin(), read->end());
    std::vector<int> signs;
    for (long p : own) {
      abs_params.push_back(std::labs(p));
      signs.push_back(p < 0 ? 1 : 0);
    }
    Match m;
    m.key = {static_cast<int>(t.tag), t.order, abs_params, signs, own};
    if (best && !(m.key < best->key)) continue;
    m.tag = t.tag;
    m.catalog_params = params;
    m.witness.transform = T;
    m.witness.relabel.assign(d, 0);
    for (std::size_t j = 0; j < d; ++j) m.witness.relabel[static_cast<std::size_t>(sigma[j])] = static_cast<int>(j);
    m.witness.catalog_name = t.catalog_name;
    m.witness.catalog_params = params;
    best = std::move(m);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Exact comparison of directions by angle in [0, 2pi).
bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  auto half = [](const LatticeVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return Integer(a[0] * b[1] - a[1] * b[0]) > 0;
}

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

Fan cycle_fan(const Rays& rays) {
  Fan f;
  f.dim = 2;
  f.rays = rays;
  const int d = static_cast<int>(rays.size());
  for (int i = 0; i < d; ++i) f.max_cones.push_back({i, (i + 1) % d});
  return f;
}

// Canonical tail of a ray cycle (counterclockwise order).
std::pair<std::vector<Integer>, Rays> canonical_cycle(const Rays& cycle) {
  const std::size_t d = cycle.size();
  std::optional<std::pair<std::vector<Integer>, Rays>> best;
  for (std::size_t start = 0; start < d; ++start) {
    for (int dir : {1, -1}) {
      Rays seq;
      for (std::size_t i = 0; i < d; ++i) seq.push_back(cycle[dir == 1 ? (start + i) % d : (start + d - i) % d]);
      const Rays first{seq[0], seq[1]};
      const UnimodularMatrix T = UnimodularMatrix::to_standard_basis(first);
      std::vector<Integer> tail;
      Rays mapped;
      for (const auto& v : seq) mapped.push_back(T.apply(v));
      for (std::size_t i = 2; i < d; ++i)
        for (std::size_t k = 0; k < 2; ++k) tail.push_back(mapped[i][k]);
      if (!best || tail < best->first) best = std::make_pair(tail, mapped);
    }
  }
  return *best;
}

Rays cyclic_order(const Fan& f) {
  Rays rays = f.rays;
  std::sort(rays.begin(), rays.end(), angle_less);
  return rays;
}

long double angle_between(const LatticeVector& a, const LatticeVector& b) {
  const long double cross = det2(a, b).get_d();
  const long double dot = Integer(a[0] * b[0] + a[1] * b[1]).get_d();
  return std::atan2(cross, dot);
}

// Depth-first extension of a ray sequence starting e1, e2 with consecutive
// determinants 1; records closed sequences of winding number 1.
void extend(Rays& seq, long double turned, int max_rays, long bound, std::map<std::vector<Integer>, Fan>& found) {
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  const LatticeVector prev = seq[seq.size() - 2];
  const LatticeVector cur = seq.back();
  if (seq.size() >= 3 && det2(cur, seq.front()) == 1) {
    const long double total = turned + angle_between(cur, seq.front());
    if (std::fabs(total - two_pi) < 0.5L) {
      const Fan f = cycle_fan(seq);
      if (validate(f).ok() && is_smooth(f).smooth && is_complete(f).complete) {
        auto [tail, rays] = canonical_cycle(seq);
        const bool bounded = std::all_of(tail.begin(), tail.end(), [bound](const Integer& x) { return abs(x) <= bound; });
        if (bounded) found.emplace(tail, cycle_fan(rays));
      }
    }
  }
  if (static_cast<int>(seq.size()) >= max_rays) return;
  for (long c = -2 * bound; c <= 2 * bound; ++c) {
    LatticeVector next({-prev[0] + c * cur[0], -prev[1] + c * cur[1]});
    if (abs(next[0]) > bound || abs(next[1]) > bound) continue;
    const long double t = turned + angle_between(cur, next);
    if (t >= two_pi - 1e-9L) continue;
    seq.push_back(next);
    extend(seq, t, max_rays, bound, found);
    seq.pop_back();
  }
}

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::vector<std::vector<long>> tuples(const std::vector<ParamRange>& ranges) {
  std::vector<std::vector<long>> out{{}};
  for (const auto& r : ranges) {
    std::vector<std::vector<long>> next;
    for (const auto& t : out)
      for (long v = r.lo; v <= r.hi; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<ParamRange> expand_ranges(const std::vector<ParamRange>& ranges, std::size_t arity, const std::string& family) {
  if (ranges.size() == arity) return ranges;
  if (ranges.size() == 1) return std::vector<ParamRange>(arity, ranges.front());
  if (arity == 0 && ranges.empty()) return {};
  throw std::invalid_argument("sweep " + family + ": expected 1 or " + std::to_string(arity) + " ranges, got " +
                              std::to_string(ranges.size()));
}

std::optional<std::set<FamilyTag>> expected_tags(const CatalogEntry& e) {
  const std::string& n = e.family;
  if (n == "cp") {
    if (e.params[0] == 1) return std::set<FamilyTag>{FamilyTag::kCP1};
    if (e.params[0] == 2) return std::set<FamilyTag>{FamilyTag::kCP2};
    if (e.params[0] == 3) return std::set<FamilyTag>{FamilyTag::kCP3};
    return std::set<FamilyTag>{FamilyTag::kUnclassified};
  }
  if (n == "hirzebruch" || n == "surface4" || n == "blowup_cp2") return std::set<FamilyTag>{FamilyTag::kHirzebruch};
  if (n == "bundle_cp2" || n == "bundle_cp1") return std::set<FamilyTag>{FamilyTag::kBundleOverCP2, FamilyTag::kBundleOverCP1};
  if (n == "case1") return std::set<FamilyTag>{FamilyTag::kCP1BundleOverHirzebruch};
  if (n == "case2") return std::set<FamilyTag>{FamilyTag::kCaseII};
  return std::nullopt;
}

}  // namespace

const char* to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kCP1:
      return "CP1";
    case FamilyTag::kCP2:
      return "CP2";
    case FamilyTag::kCP3:
      return "CP3";
    case FamilyTag::kHirzebruch:
      return "Hirzebruch";
    case FamilyTag::kBundleOverCP2:
      return "BundleOverCP2";
    case FamilyTag::kBundleOverCP1:
      return "BundleOverCP1";
    case FamilyTag::kCP1BundleOverHirzebruch:
      return "CP1BundleOverHirzebruch";
    case FamilyTag::kCaseII:
      return "CaseII";
    case FamilyTag::kUnclassified:
      return "Unclassified";
  }
  return "?";
}

std::string ClassificationResult::label() const {
  std::string s = to_string(tag);
  if (params.empty()) return s;
  if (tag == FamilyTag::kCaseII)
    return s + "(" + std::to_string(params[0]) + "; " + join(std::vector<long>(params.begin() + 1, params.end())) + ")";
  return s + "(" + join(params) + ")";
}

Fan apply_witness(const Fan& f, const ClassificationWitness& w) {
  return relabel_rays(apply_unimodular(w.transform, f), w.relabel);
}

ClassificationResult classify_structure(const Fan& f) {
  require_smooth_complete(f);
  ClassificationResult r;
  const int b2 = static_cast<int>(f.num_rays()) - f.dim;
  if (f.dim > 3) return r;
  std::optional<Match> best;
  for (const auto& t : templates_for(f.dim, b2)) match_template(f, t, best);
  if (!best) return r;
  r.tag = best->tag;
  r.witness = best->witness;
  r.params = best->catalog_params;
  if (r.tag == FamilyTag::kCP1 || r.tag == FamilyTag::kCP2 || r.tag == FamilyTag::kCP3) r.params.clear();
  if (r.tag == FamilyTag::kHirzebruch) r.params = {std::labs(r.params[0])};
  return r;
}

ClassificationResult classify(const Fan& f) {
  ClassificationResult r = classify_structure(f);
  r.verdict = certify(f).verdict;
  return r;
}

Fan canonical_form_dim2(const Fan& f) {
  if (f.dim != 2) throw std::invalid_argument("canonical_form_dim2: dimension must be 2");
  require_smooth_complete(f);
  return cycle_fan(canonical_cycle(cyclic_order(f)).second);
}

std::vector<Fan> enumerate_dim2(int max_rays, long coord_bound, int jobs) {
  if (max_rays < 3) throw std::invalid_argument("enumerate_dim2: max_rays must be >= 3");
  if (coord_bound < 1) throw std::invalid_argument("enumerate_dim2: coord_bound must be >= 1");
  const LatticeVector e1{1, 0}, e2{0, 1};
  const long double first_turn = angle_between(e1, e2);

  // One task per choice of the third ray.
  std::vector<LatticeVector> thirds;
  for (long c = -2 * coord_bound; c <= 2 * coord_bound; ++c) {
    LatticeVector next({-e1[0] + c * e2[0], -e1[1] + c * e2[1]});
    if (abs(next[0]) <= coord_bound && abs(next[1]) <= coord_bound) thirds.push_back(next);
  }
  std::vector<std::map<std::vector<Integer>, Fan>> partial(thirds.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < thirds.size(); i = cursor++) {
      Rays seq{e1, e2, thirds[i]};
      extend(seq, first_turn + angle_between(e2, thirds[i]), max_rays, coord_bound, partial[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::pair<std::size_t, std::vector<Integer>>, Fan> merged;
  for (auto& m : partial)
    for (auto& [tail, fan] : m) merged.emplace(std::make_pair(fan.num_rays(), tail), fan);
  std::vector<Fan> out;
  for (auto& [key, fan] : merged) out.push_back(std::move(fan));
  return out;
}

SweepRow evaluate_entry(const CatalogEntry& entry) {
  SweepRow row;
  row.family = entry.family;
  row.params = entry.params;
  try {
    const auto cert = certify(entry.fan, CertifyOptions{.prefilter = false, .degree_cap = std::nullopt});
    const CohomologyReport& rep = *cert.report;
    row.verdict = cert.verdict;
    row.poincare = rep.poincare;
    row.betas = cert.betas;
    row.mu = cert.mu;
    row.mu_total = cert.mu_total;
    const int b2 = static_cast<int>(entry.fan.num_rays()) - entry.fan.dim;
    row.prefiltered = b2 > entry.fan.dim;
    if (row.prefiltered && cert.verdict == Verdict::kElliptic) row.failures.push_back("pre-filter disagrees with full computation");

    const auto cls = classify_structure(entry.fan);
    row.classification = cls.label();
    if (const auto tags = expected_tags(entry); tags && !tags->count(cls.tag))
      row.failures.push_back("classified as " + cls.label());

    if (cert.verdict != entry.expected_verdict)
      row.failures.push_back(std::string("verdict ") + to_string(cert.verdict) + ", expected " + to_string(entry.expected_verdict));
    if (entry.expected_poincare && rep.poincare != *entry.expected_poincare) row.failures.push_back("Poincare polynomial differs");
    if (cert.verdict == Verdict::kElliptic && rep.poincare != projective_product_poincare(cert.betas))
      row.failures.push_back("Poincare polynomial differs from the product of projective spaces");
    if (entry.display) {
      row.display_match = display_matches(*entry.display, rep.reduced);
      if (!*row.display_match) row.failures.push_back("reduced ideal differs from the expected algebra");
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    row.failures.push_back(std::string("pipeline error: ") + e.what());
  }
  return row;
}

SweepSummary sweep(const std::string& family, const std::vector<ParamRange>& ranges, int jobs) {
  for (const auto& r : ranges)
    if (r.lo > r.hi) throw std::invalid_argument("sweep: empty range");

  std::vector<std::vector<long>> params;  // full catalog parameter lists
  std::string name = family;
  if (family == "case2") {
    for (long k = 1; k <= 5; ++k)
      for (auto t : tuples(expand_ranges(ranges, static_cast<std::size_t>(family_arity("case2", {k}) - 1), family))) {
        t.insert(t.begin(), k);
        params.push_back(std::move(t));
      }
    for (auto t : case2_family6_triples()) {
      t.insert(t.begin(), 6);
      params.push_back(std::move(t));
    }
  } else if (family.rfind("case2:", 0) == 0) {
    name = "case2";
    const long k = std::stol(family.substr(6));
    for (auto t : tuples(expand_ranges(ranges, static_cast<std::size_t>(family_arity("case2", {k}) - 1), family))) {
      t.insert(t.begin(), k);
      params.push_back(std::move(t));
    }
  } else {
    const int arity = family_arity(family);
    const std::size_t n = arity < 0 ? ranges.size() : static_cast<std::size_t>(arity);
    params = tuples(expand_ranges(ranges, n, family));
  }

  std::vector<CatalogEntry> entries;
  for (const auto& p : params) {
    try {
      entries.push_back(catalog(name, p));
    } catch (const std::invalid_argument&) {
      // outside the family's parameter domain
    }
  }

  SweepSummary summary;
  summary.family = family;
  summary.rows.resize(entries.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < entries.size(); i = cursor++) summary.rows[i] = evaluate_entry(entries[i]);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(summary.rows.begin(), summary.rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return std::tie(a.family, a.params) < std::tie(b.family, b.params); });
  for (const auto& r : summary.rows) {
    (r.verdict == Verdict::kElliptic ? summary.elliptic : summary.hyperbolic)++;
    if (!r.failures.empty()) ++summary.failures;
  }
  return summary;
}

}  // namespace toric
