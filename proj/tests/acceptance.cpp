// Acceptance run: one PASS/FAIL line per criterion A1..A10. Every comparison
// is exact; the pinned constants below are the only knobs.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/generators.hpp"
#include "oracle/oracles.hpp"
#include "toric/catalog.hpp"
#include "toric/classify.hpp"
#include "toric/cohomology.hpp"
#include "toric/ellipticity.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"

namespace {

using namespace toric;

constexpr long kEnumerateBound = 10;
constexpr long kBundleRange = 5;
constexpr long kCaseIRange = 3;
constexpr long kCaseIIRange = 4;
constexpr int kCaseIIMinMu = 4;
constexpr int kOracleMinInstances = 25;
constexpr int kOracleMaxVars = 6;
constexpr int kInvarianceTrials = 50;
constexpr std::uint64_t kInvarianceSeed = 20240601;
constexpr int kJobs = 1;

const std::vector<long> kP1Cubed{1, 0, 3, 0, 3, 0, 1};
const std::vector<long> kP1TimesP2{1, 0, 2, 0, 2, 0, 1};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 12) notes.push_back(why);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string params_str(const std::vector<long>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

// Every fan touched by A1..A8, keyed by a readable label, for A9.
std::map<std::string, Fan> touched;

void touch(const std::string& label, const Fan& f) { touched.emplace(label, f); }

// Elliptic certificates collected by A1..A3 for A6.
struct EllipticInstance {
  std::string label;
  EllipticityCertificate cert;
};
std::vector<EllipticInstance> elliptic_instances;

// Dimension-3 instances of A2 with P = (1+t^2)(1+t^2+t^4), for A10.
std::vector<std::pair<std::string, Fan>> bundle_instances;

Outcome check_sweep_rows(const SweepSummary& s, Verdict want, const std::vector<long>& poincare, bool need_display) {
  Outcome o;
  for (const auto& r : s.rows) {
    const std::string label = r.family + "(" + params_str(r.params) + ")";
    if (!r.error.empty()) o.fail(label + ": " + r.error);
    for (const auto& f : r.failures) o.fail(label + ": " + f);
    if (r.verdict != want) o.fail(label + ": verdict " + to_string(r.verdict));
    if (!poincare.empty() && r.poincare != poincare) o.fail(label + ": unexpected Poincare polynomial");
    if (need_display && r.display_match != true) o.fail(label + ": reduced ideal does not match the displayed algebra");
  }
  return o;
}

void collect_sweep(const SweepSummary& s) {
  for (const auto& r : s.rows) {
    const std::string family = r.family.rfind("case2", 0) == 0 ? "case2" : r.family;
    const auto e = catalog(family, r.params);
    const std::string label = family + "(" + params_str(r.params) + ")";
    touch(label, e.fan);
    if (r.error.empty() && r.verdict == Verdict::kElliptic)
      elliptic_instances.push_back({label, certify(e.fan, {.prefilter = false})});
  }
}

Outcome a1() {
  Outcome o;
  const auto fans = enumerate_dim2(4, kEnumerateBound, kJobs);
  int cp2 = 0;
  std::multiset<long> bs;
  for (const auto& f : fans) {
    const auto c = classify(f);
    const std::string label = "enumerated " + c.label();
    touch(label, f);
    const auto cert = certify(f, {.prefilter = false});
    elliptic_instances.push_back({label, cert});
    if (cert.verdict != Verdict::kElliptic) o.fail(label + " not elliptic");
    if (c.tag == FamilyTag::kCP2) {
      ++cp2;
      continue;
    }
    if (c.tag != FamilyTag::kHirzebruch || !c.witness) {
      o.fail("unexpected fan " + c.label());
      continue;
    }
    bs.insert(c.params[0]);
    // The surviving variables x, y are the classes of the enumerated rays that
    // the witness sends to catalog rays 1 and 2 of hirzebruch(b).
    const long b = c.witness->catalog_params[0];
    DisplayedAlgebra alg;
    alg.variables = {"x", "y"};
    const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    alg.generators = {x * x, y * (y + b * x)};
    const std::size_t d = f.num_rays();
    for (int target = 0; target < 2; ++target) {
      const auto it = std::find(c.witness->relabel.begin(), c.witness->relabel.end(), target);
      alg.identification.push_back(Polynomial::variable(d, static_cast<std::size_t>(it - c.witness->relabel.begin())));
    }
    const auto reduced = eliminate_linear(build_presentation(f));
    if (!display_matches(alg, reduced)) o.fail(label + ": reduced ideal differs from (x^2, y(y+bx))");
  }
  std::multiset<long> want;
  for (long b = 0; b <= kEnumerateBound; ++b) want.insert(b);
  if (cp2 != 1) o.fail("CP2 found " + std::to_string(cp2) + " times");
  if (bs != want) o.fail("Hirzebruch parameters differ from 0.." + std::to_string(kEnumerateBound));
  if (fans.size() != want.size() + 1) o.fail("enumeration returned " + std::to_string(fans.size()) + " fans");
  o.note(std::to_string(fans.size()) + " fans: CP2 and Hirzebruch(0.." + std::to_string(kEnumerateBound) + "), all elliptic");
  return o;
}

Outcome a2() {
  Outcome o;
  const auto cp3 = catalog("cp", {3});
  touch("cp(3)", cp3.fan);
  const auto c = certify(cp3.fan, {.prefilter = false});
  elliptic_instances.push_back({"cp(3)", c});
  if (c.verdict != Verdict::kElliptic || c.betas != std::vector<int>{4}) o.fail("cp(3) is not elliptic with beta {4}");

  for (const std::string family : {"bundle_cp2", "bundle_cp1"}) {
    const auto s = sweep(family, {{-kBundleRange, kBundleRange}}, kJobs);
    const auto r = check_sweep_rows(s, Verdict::kElliptic, kP1TimesP2, true);
    for (const auto& n : r.notes) o.fail(n);
    collect_sweep(s);
    for (const auto& row : s.rows) bundle_instances.emplace_back(family + "(" + params_str(row.params) + ")", catalog(family, row.params).fan);
    o.note(family + ": " + std::to_string(s.elliptic) + "/" + std::to_string(s.rows.size()) + " elliptic");
  }
  return o;
}

Outcome a3() {
  Outcome o;
  const auto s = sweep("case1", {{-kCaseIRange, kCaseIRange}}, kJobs);
  const auto r = check_sweep_rows(s, Verdict::kElliptic, kP1Cubed, true);
  for (const auto& n : r.notes) o.fail(n);
  for (const auto& row : s.rows)
    if (row.betas != std::vector<int>{2, 2, 2}) o.fail("case1(" + params_str(row.params) + "): betas differ from {2,2,2}");
  collect_sweep(s);
  if (s.rows.size() != 343u) o.fail("expected 343 instances, got " + std::to_string(s.rows.size()));
  o.note(std::to_string(s.elliptic) + "/" + std::to_string(s.rows.size()) + " elliptic");
  return o;
}

// mu of Q[D]/(SR + linear forms) built straight from the combinatorics,
// without the smooth/complete precondition of build_presentation.
std::vector<int> algebraic_mu(const Fan& f) {
  const std::size_t d = f.num_rays();
  GradedPresentation full;
  for (std::size_t i = 0; i < d; ++i) full.variables.push_back("D" + std::to_string(i + 1));
  for (const auto& nf : minimal_non_faces(f)) {
    Polynomial m = Polynomial::constant(d, 1);
    for (int i : nf.indices) m = m * Polynomial::variable(d, static_cast<std::size_t>(i));
    full.generators.push_back(m);
  }
  for (int j = 0; j < f.dim; ++j) {
    Polynomial l(d);
    for (std::size_t i = 0; i < d; ++i) l += Rational(f.rays[i][static_cast<std::size_t>(j)]) * Polynomial::variable(d, i);
    full.generators.push_back(l);
  }
  const auto reduced = eliminate_linear(full);
  return minimal_generator_counts(reduced.generators, reduced.nvars()).counts;
}

Outcome a4() {
  Outcome o;
  int instances = 0;
  for (int k = 1; k <= 5; ++k) {
    const auto s = sweep("case2:" + std::to_string(k), {{-kCaseIIRange, kCaseIIRange}}, kJobs);
    const auto r = check_sweep_rows(s, Verdict::kHyperbolic, k == 1 ? kP1Cubed : std::vector<long>{}, true);
    for (const auto& n : r.notes) o.fail("family " + std::to_string(k) + ": " + n);
    for (const auto& row : s.rows)
      if (row.mu_total < kCaseIIMinMu) o.fail("case2(" + params_str(row.params) + "): mu " + std::to_string(row.mu_total));
    collect_sweep(s);
    instances += static_cast<int>(s.rows.size());
  }
  o.note("families 1-5: " + std::to_string(instances) + " instances, all hyperbolic with mu >= 4");

  int rejected = 0;
  for (const auto& t : case2_family6_triples()) {
    std::vector<long> params{6};
    params.insert(params.end(), t.begin(), t.end());
    const Fan f = catalog("case2", params).fan;
    const std::string label = "case2(" + params_str(params) + ")";
    try {
      const auto c = certify(f, {.prefilter = false});
      if (c.verdict != Verdict::kHyperbolic || c.mu_total < kCaseIIMinMu) o.fail(label + ": not hyperbolic with mu >= 4");
    } catch (const GeometryError& e) {
      ++rejected;
      const auto cover = oracle::covering_counts(f, 200, 1);
      std::string counts;
      for (int n : cover) counts += (counts.empty() ? "" : ",") + std::to_string(n);
      int mu = -1;
      try {
        const auto m = algebraic_mu(f);
        mu = 0;
        for (int x : m) mu += x;
      } catch (const std::exception&) {
      }
      o.fail(label + ": not a complete fan (" + e.what() + "; covering multiplicity {" + counts +
             "}); algebraic quotient mu = " + (mu < 0 ? std::string("n/a") : std::to_string(mu)));
    }
  }
  if (rejected) o.note(std::to_string(rejected) + "/5 isolated triples give pseudo-fans covering R^3 twice, so they define no toric manifold");
  return o;
}

Outcome a5() {
  Outcome o;
  Fan f = catalog("cp", {3}).fan;
  f = star_subdivide(f, f.max_cones[0]);
  f = star_subdivide(f, f.max_cones[0]);
  touch("cp(3) blown up twice", f);
  const auto c = certify(f, {.prefilter = false});
  if (c.mu.size() < 3 || c.mu[0] != 0 || c.mu[1] != 3 || c.mu[2] != 2) o.fail("mu table differs from (0,3,2)");
  if (c.mu_total != 5) o.fail("mu total " + std::to_string(c.mu_total));
  if (c.verdict != Verdict::kHyperbolic) o.fail("not hyperbolic");
  if (!c.report || c.report->poincare != kP1Cubed) o.fail("Poincare polynomial differs from (1+t^2)^3");
  if (!c.report || c.report->euler != 8) o.fail("euler characteristic differs from 8");
  o.note("mu by degree: 2:" + std::to_string(c.mu[0]) + " 4:" + std::to_string(c.mu[1]) + " 6:" +
         std::to_string(c.mu[2]) + ", total " + std::to_string(c.mu_total));
  return o;
}

Outcome a6() {
  Outcome o;
  for (const auto& [label, c] : elliptic_instances) {
    if (c.verdict != Verdict::kElliptic) continue;
    std::vector<int> peeled;
    try {
      peeled = peel_exponents(c.report->poincare, c.n);
    } catch (const std::exception& e) {
      o.fail(label + ": peel failed: " + e.what());
      continue;
    }
    std::vector<int> from_mu;
    for (std::size_t k = 0; k < c.mu.size(); ++k)
      for (int i = 0; i < c.mu[k]; ++i) from_mu.push_back(static_cast<int>(k) + 1);
    if (peeled != from_mu) o.fail(label + ": peeled exponents differ from generator degrees");
    int sum = 0;
    for (int b : peeled) sum += b - 1;
    if (sum != c.dim) o.fail(label + ": sum(beta-1) != N");
    if (projective_product_poincare(peeled) != c.report->poincare) o.fail(label + ": P differs from the product of projective spaces");
  }
  o.note(std::to_string(elliptic_instances.size()) + " elliptic instances");
  return o;
}

Outcome a7() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<long>>> entries{
      {"cp", {1}}, {"cp", {2}}, {"cp", {3}}, {"cp", {4}}, {"cp", {5}},
      {"hirzebruch", {0}}, {"hirzebruch", {1}}, {"hirzebruch", {-3}}, {"surface4", {2, 0}},
      {"bundle_cp2", {-2}}, {"bundle_cp2", {0}}, {"bundle_cp2", {5}},
      {"bundle_cp1", {0, 0}}, {"bundle_cp1", {1, -1}}, {"bundle_cp1", {3, 2}},
      {"case1", {0, 0, 0}}, {"case1", {1, 2, 0}}, {"case1", {-3, 1, 2}},
      {"case2", {1, 0, 0}}, {"case2", {1, 2, -1}}, {"case2", {2, 1, 1}}, {"case2", {3, -2}},
      {"case2", {4, 3}}, {"case2", {5, 1}}, {"cp_product", {1, 1}}, {"cp_product", {1, 1, 1}},
      {"cp_product", {2, 2}}, {"cp_product", {1, 3}}, {"blowup_cp2", {}}, {"blowup_cpN", {3}},
      {"blowup_cpN", {4}}, {"blowup2_cp3", {}}};
  int checked = 0;
  for (const auto& [name, params] : entries) {
    const auto f = catalog(name, params).fan;
    const std::string label = name + "(" + params_str(params) + ")";
    touch(label, f);
    const auto r = cohomology_report(f);
    if (r.reduced.nvars() > static_cast<std::size_t>(kOracleMaxVars)) continue;
    const int up_to = r.dim + 2;
    const auto ours = hilbert_function(r.reduced_basis, up_to);
    const auto theirs = oracle::hilbert_function(r.reduced.generators, r.reduced.nvars(), up_to);
    if (ours != theirs) o.fail(label + ": Hilbert function differs from the oracle");
    ++checked;
  }
  if (checked < kOracleMinInstances) o.fail("only " + std::to_string(checked) + " instances checked");
  o.note(std::to_string(checked) + " instances agree with the brute-force oracle");
  return o;
}

Outcome a8() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<long>>> pool{
      {"cp", {2}}, {"cp", {3}}, {"hirzebruch", {3}}, {"hirzebruch", {-1}}, {"bundle_cp2", {2}},
      {"bundle_cp1", {-1, 4}}, {"case1", {1, -2, 1}}, {"case1", {0, 3, -1}}, {"case2", {1, 1, -2}},
      {"case2", {2, -1, 2}}, {"case2", {3, 2}}, {"case2", {4, -1}}, {"case2", {5, 3}},
      {"cp_product", {1, 2}}, {"blowup_cp2", {}}, {"blowup2_cp3", {}}, {"blowup_cpN", {3}}};
  gen::Rng rng(kInvarianceSeed);
  for (int t = 0; t < kInvarianceTrials; ++t) {
    const auto& [name, params] = pool[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
    const Fan f = catalog(name, params).fan;
    const auto u = gen::unimodular(rng, static_cast<std::size_t>(f.dim));
    const Fan g = relabel_rays(apply_unimodular(u, f), gen::permutation(rng, f.num_rays()));
    const std::string label = name + "(" + params_str(params) + ") trial " + std::to_string(t);
    touch(label, g);
    const auto rf = cohomology_report(f), rg = cohomology_report(g);
    if (rf.betti != rg.betti) o.fail(label + ": Betti numbers changed");
    if (rf.euler != rg.euler) o.fail(label + ": euler characteristic changed");
    if (certify(f, {.prefilter = false}).verdict != certify(g, {.prefilter = false}).verdict) o.fail(label + ": verdict changed");
    const auto cf = classify_structure(f), cg = classify_structure(g);
    if (cf.tag != cg.tag || cf.params != cg.params) o.fail(label + ": classification changed");
  }
  o.note(std::to_string(kInvarianceTrials) + " random transforms and relabelings");
  return o;
}

Outcome a9() {
  Outcome o;
  for (const auto& [label, f] : touched) {
    CohomologyReport r;
    try {
      r = cohomology_report(f);
    } catch (const std::exception& e) {
      o.fail(label + ": " + e.what());
      continue;
    }
    if (r.euler != static_cast<long>(f.num_cones())) o.fail(label + ": chi != number of maximal cones");
    for (int k = 0; k <= r.dim; ++k)
      if (r.betti[static_cast<std::size_t>(k)] != r.betti[static_cast<std::size_t>(r.dim - k)]) o.fail(label + ": Poincare duality fails");
    for (int k = 0; k <= r.dim; ++k)
      if (determinant(cup_pairing(r, k)) == 0) o.fail(label + ": singular cup pairing in degree " + std::to_string(2 * k));
    if (r.b2 != static_cast<int>(f.num_rays()) - f.dim) o.fail(label + ": b2 != d - N");
    const int up_to = r.dim + 2;
    if (presentation_hilbert_function(r.full, up_to) != presentation_hilbert_function(r.reduced, up_to))
      o.fail(label + ": full and reduced Hilbert functions differ");
    if (r.betti != oracle::h_vector(f)) o.fail(label + ": Betti numbers differ from the face-count oracle");
  }
  o.note(std::to_string(touched.size()) + " instances");
  return o;
}

Outcome a10() {
  Outcome o;
  int checked = 0;
  for (const auto& [label, f] : bundle_instances) {
    const auto r = cohomology_report(f);
    if (r.dim != 3 || r.poincare != kP1TimesP2) continue;
    ++checked;
    if (!is_complete_intersection(r.reduced)) o.fail(label + ": not a complete intersection");
  }
  if (checked == 0) o.fail("no instances");
  o.note(std::to_string(checked) + " instances are complete intersections");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << name << " " << (o.pass ? "PASS" : "FAIL") << " (" << static_cast<int>(secs * 10) / 10.0 << "s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
