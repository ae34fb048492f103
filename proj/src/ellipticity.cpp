#include "toric/ellipticity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

RationalVector coordinates(const Polynomial& p, const std::map<Monomial, std::size_t>& index) {
  RationalVector v(index.size());
  for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
  return v;
}

// Number of candidates (in order) that are independent modulo the degree-k
// multiples of `lower`; the independent ones are appended to `picked`.
int pick_new_generators(const std::vector<Polynomial>& lower, const std::vector<const Polynomial*>& candidates,
                        std::size_t nvars, int k, std::vector<Polynomial>& picked, std::size_t& span_rank) {
  const auto monos = monomials_of_degree(nvars, k);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  RowSpace space(monos.size());
  for (const auto& g : lower) {
    const int e = g.degree();
    if (e >= k) continue;
    for (const auto& m : monomials_of_degree(nvars, k - e)) space.insert(coordinates(m * g, index));
  }
  int count = 0;
  for (const Polynomial* c : candidates) {
    if (space.insert(coordinates(*c, index))) {
      picked.push_back(*c);
      ++count;
    }
  }
  span_rank = space.rank();
  return count;
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::kElliptic ? "elliptic" : "hyperbolic"; }

MinimalGenerators minimal_generator_counts(std::span<const Polynomial> gens, std::size_t nvars,
                                           std::optional<int> degree_cap) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("minimal_generator_counts: arity mismatch");
    if (!g.is_zero() && !g.is_homogeneous()) throw std::invalid_argument("minimal_generator_counts: non-homogeneous generator");
  }
  MinimalGenerators out;
  out.basis = buchberger(gens, nvars);
  const auto bound = quotient_degree_bound(out.basis);
  if (!bound) throw ConsistencyError("quotient is not finite-dimensional");
  if (*bound == 0 && hilbert_function(out.basis, 0).front() == 0)
    throw std::invalid_argument("minimal_generator_counts: unit ideal");

  const auto hf = hilbert_function(out.basis, *bound + 2);
  int vanish = *bound + 1;
  while (vanish > 0 && hf[static_cast<std::size_t>(vanish) - 1] == 0) --vanish;
  if (degree_cap && vanish > *degree_cap)
    throw ConsistencyError("quotient does not vanish within degree cap " + std::to_string(*degree_cap));

  // mu_k for k = 1..vanish, plus one extra degree that must contribute nothing.
  for (int k = 1; k <= vanish + 1; ++k) {
    std::vector<const Polynomial*> candidates;
    for (const auto& g : gens)
      if (!g.is_zero() && g.degree() == k) candidates.push_back(&g);
    for (const auto& g : out.basis.generators())
      if (g.degree() == k) candidates.push_back(&g);

    std::size_t span_rank = 0;
    const int mu = pick_new_generators(out.generators, candidates, nvars, k, out.generators, span_rank);
    const long dim_ik = static_cast<long>(monomials_of_degree(nvars, k).size()) - hf[static_cast<std::size_t>(k)];
    if (static_cast<long>(span_rank) != dim_ik)
      throw ConsistencyError("graded slice of degree " + std::to_string(k) + " has rank " + std::to_string(span_rank) +
                             ", expected " + std::to_string(dim_ik));
    if (k == vanish + 1) {
      if (mu != 0) throw ConsistencyError("minimal generator found above the vanishing degree");
      break;
    }
    out.counts.push_back(mu);
    out.total += mu;
  }

  if (!(buchberger(out.generators, nvars) == out.basis))
    throw ConsistencyError("selected generators do not generate the ideal");
  return out;
}

bool is_complete_intersection(const GradedPresentation& reduced) {
  for (const auto& g : reduced.generators)
    if (g.degree() == 1) throw std::invalid_argument("is_complete_intersection: presentation has linear generators");
  const auto mg = minimal_generator_counts(reduced.generators, reduced.nvars());
  return mg.total == static_cast<int>(reduced.nvars());
}

std::vector<int> peel_exponents(const std::vector<long>& poincare, int n) {
  if (poincare.empty() || poincare.front() != 1) throw std::domain_error("peel_exponents: b_0 must be 1");
  if (n < 1) throw std::domain_error("peel_exponents: n must be positive");
  // Algebraic degrees: s = t^2.
  std::vector<Integer> q;
  for (std::size_t j = 0; j < poincare.size(); ++j) {
    if (j % 2) {
      if (poincare[j] != 0) throw std::domain_error("peel_exponents: odd-degree Betti number");
      continue;
    }
    q.emplace_back(poincare[j]);
  }
  for (int i = 0; i < n; ++i) {
    // q *= (1 - s)
    q.emplace_back(0);
    for (std::size_t j = q.size() - 1; j > 0; --j) q[j] -= q[j - 1];
  }
  auto trim = [&q] {
    while (q.size() > 1 && q.back() == 0) q.pop_back();
  };
  trim();

  std::vector<int> betas;
  while (q.size() > 1) {
    std::size_t beta = 1;
    while (q[beta] == 0) ++beta;
    const Integer c = q[beta];
    if (c > 0) throw std::domain_error("peel_exponents: positive coefficient in degree " + std::to_string(2 * beta));
    const long mult = -c.get_si();
    for (long r = 0; r < mult; ++r) {
      // q /= (1 - s^beta), exact: the quotient's coefficients satisfy
      // out[j] = q[j] + out[j - beta].
      std::vector<Integer> out(q.size());
      for (std::size_t j = 0; j < q.size(); ++j) out[j] = q[j] + (j >= beta ? out[j - beta] : Integer(0));
      // The division is exact iff the top beta coefficients vanish.
      for (std::size_t j = q.size() >= beta ? q.size() - beta : 0; j < q.size(); ++j) {
        if (out[j] != 0) throw std::domain_error("peel_exponents: (1 - t^" + std::to_string(2 * beta) + ") does not divide");
      }
      out.resize(q.size() - beta);
      q = std::move(out);
      betas.push_back(static_cast<int>(beta));
      if (q.empty()) throw std::domain_error("peel_exponents: residue vanished");
    }
    trim();
    if (static_cast<int>(betas.size()) > n) throw std::domain_error("peel_exponents: more than n exponents");
  }
  if (q.front() != 1) throw std::domain_error("peel_exponents: nontrivial residue");
  if (static_cast<int>(betas.size()) != n) throw std::domain_error("peel_exponents: exponent count differs from n");
  std::sort(betas.begin(), betas.end());
  return betas;
}

std::vector<long> product_hilbert_series(const std::vector<int>& betas, int up_to) {
  std::vector<long> series(static_cast<std::size_t>(up_to) + 1, 0);
  series[0] = 1;
  for (int b : betas) {
    // multiply by 1 + s + ... + s^{b-1}
    std::vector<long> next(series.size(), 0);
    for (std::size_t j = 0; j < series.size(); ++j)
      for (int e = 0; e < b && j + static_cast<std::size_t>(e) < series.size(); ++e) next[j + static_cast<std::size_t>(e)] += series[j];
    series = std::move(next);
  }
  return series;
}

EllipticityCertificate certify(const Fan& f, const CertifyOptions& options) {
  require_smooth_complete(f);
  EllipticityCertificate cert;
  cert.dim = f.dim;
  cert.n = static_cast<int>(f.num_rays()) - f.dim;

  if (options.prefilter && cert.n > cert.dim) {
    cert.verdict = Verdict::kHyperbolic;
    cert.prefiltered = true;
    return cert;
  }

  CohomologyReport report = cohomology_report(f);
  if (report.b2 != cert.n) throw ConsistencyError("b2 differs from d - N");
  const auto mg = minimal_generator_counts(report.reduced.generators, report.reduced.nvars(), options.degree_cap);
  cert.mu = mg.counts;
  cert.mu.resize(static_cast<std::size_t>(cert.dim) + 1, 0);
  cert.mu_total = mg.total;
  cert.variables = report.reduced.variables;
  cert.generators = mg.generators;
  if (cert.mu_total < cert.n) throw ConsistencyError("fewer minimal generators than variables in a finite quotient");

  if (cert.mu_total == cert.n) {
    cert.verdict = Verdict::kElliptic;
    for (const auto& g : cert.generators) cert.betas.push_back(g.degree());
    std::sort(cert.betas.begin(), cert.betas.end());

    std::vector<int> peeled;
    try {
      peeled = peel_exponents(report.poincare, cert.n);
    } catch (const std::domain_error& e) {
      throw ConsistencyError(std::string("elliptic verdict but ") + e.what());
    }
    if (peeled != cert.betas) throw ConsistencyError("peeled exponents differ from generator degrees");
    int sum = 0;
    for (int b : cert.betas) sum += b - 1;
    if (sum != cert.dim) throw ConsistencyError("sum of (beta_i - 1) differs from N");
    const auto series = product_hilbert_series(cert.betas, cert.dim);
    if (series != report.betti) throw ConsistencyError("Hilbert series identity fails");

    for (int b : cert.betas) cert.generator_degrees.push_back(2 * b);
    cert.alphas.assign(static_cast<std::size_t>(cert.n), 1);
    cert.pi_even = cert.n;
    cert.pi_odd = cert.n;
  } else {
    cert.verdict = Verdict::kHyperbolic;
    int cumulative = 0;
    for (std::size_t k = 0; k < cert.mu.size(); ++k) {
      cumulative += cert.mu[k];
      if (cumulative > cert.n) {
        cert.excess_degree = static_cast<int>(k) + 1;
        break;
      }
    }
  }
  cert.report = std::move(report);
  return cert;
}

}  // namespace toric
