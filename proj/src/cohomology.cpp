#include "toric/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

std::vector<std::string> GradedPresentation::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_string(variables));
  return out;
}

GradedPresentation build_presentation(const Fan& f) {
  require_smooth_complete(f);
  const std::size_t d = f.num_rays();
  GradedPresentation p;
  p.form = PresentationForm::kFull;
  for (std::size_t i = 0; i < d; ++i) p.variables.push_back("D" + std::to_string(i + 1));

  for (const auto& nf : minimal_non_faces(f)) {
    Monomial m(d);
    for (int i : nf.indices) m = m * Monomial::variable(d, static_cast<std::size_t>(i));
    p.generators.push_back(Polynomial::term(m, Rational(1)));
  }
  for (int j = 0; j < f.dim; ++j) {
    Polynomial lin(d);
    for (std::size_t i = 0; i < d; ++i)
      lin.add_term(Monomial::variable(d, i), Rational(f.rays[i][static_cast<std::size_t>(j)]));
    p.generators.push_back(std::move(lin));
  }
  return p;
}

GradedPresentation eliminate_linear(const GradedPresentation& full) {
  const std::size_t d = full.nvars();
  RationalMatrix linear;
  std::vector<const Polynomial*> nonlinear;
  for (const auto& g : full.generators) {
    if (g.is_zero()) continue;
    if (g.degree() == 1 && g.is_homogeneous()) {
      RationalVector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = g.coefficient(Monomial::variable(d, i));
      linear.push_back(std::move(row));
    } else {
      nonlinear.push_back(&g);
    }
  }

  std::vector<std::size_t> priority(d);
  std::iota(priority.rbegin(), priority.rend(), std::size_t{0});
  const EchelonForm ech = reduced_echelon(linear, priority);
  if (ech.pivots.size() != linear.size())
    throw GeometryError("linear relations have rank " + std::to_string(ech.pivots.size()) + " < " +
                        std::to_string(linear.size()) + " (rays do not span)");

  std::vector<bool> is_pivot(d, false);
  for (auto c : ech.pivots) is_pivot[c] = true;

  GradedPresentation out;
  out.form = PresentationForm::kReduced;
  std::vector<std::size_t> position(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_pivot[i]) continue;
    position[i] = out.survivors.size();
    out.survivors.push_back(static_cast<int>(i));
  }
  const std::size_t n = out.survivors.size();
  out.variables = default_variable_names(n);

  out.substitution.assign(d, Polynomial(n));
  for (std::size_t i = 0; i < d; ++i)
    if (!is_pivot[i]) out.substitution[i] = Polynomial::variable(n, position[i]);
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    Polynomial expr(n);
    for (std::size_t j = 0; j < d; ++j) {
      if (is_pivot[j] || ech.rows[r][j] == 0) continue;
      expr.add_term(Monomial::variable(n, position[j]), -ech.rows[r][j]);
    }
    out.substitution[ech.pivots[r]] = std::move(expr);
  }

  for (const Polynomial* g : nonlinear) {
    Polynomial s = g->substitute(out.substitution);
    if (!s.is_zero()) out.generators.push_back(std::move(s));
  }
  return out;
}

std::vector<long> presentation_hilbert_function(const GradedPresentation& p, int up_to) {
  return hilbert_function(buchberger(p.generators, p.nvars()), up_to);
}

CohomologyReport cohomology_report(const Fan& f) {
  CohomologyReport rep;
  rep.full = build_presentation(f);
  rep.reduced = eliminate_linear(rep.full);
  rep.dim = f.dim;
  rep.num_rays = static_cast<int>(f.num_rays());
  rep.num_max_cones = f.num_cones();
  rep.reduced_basis = buchberger(rep.reduced.generators, rep.reduced.nvars());

  const int n = f.dim;
  if (!quotient_degree_bound(rep.reduced_basis))
    throw ConsistencyError("cohomology quotient is not finite-dimensional");
  const auto hf = hilbert_function(rep.reduced_basis, n + 2);
  if (hf[static_cast<std::size_t>(n) + 1] != 0 || hf[static_cast<std::size_t>(n) + 2] != 0)
    throw ConsistencyError("cohomology does not vanish above degree 2N");

  rep.betti.assign(hf.begin(), hf.begin() + n + 1);
  rep.b2 = static_cast<int>(rep.betti.size() > 1 ? rep.betti[1] : 0);
  rep.poincare.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) rep.poincare[2 * static_cast<std::size_t>(k)] = rep.betti[static_cast<std::size_t>(k)];
  rep.euler = std::accumulate(rep.betti.begin(), rep.betti.end(), 0L);
  rep.socle_degree = n;

  if (rep.betti.front() != 1 || rep.betti.back() != 1)
    throw ConsistencyError("b_0 or b_2N differs from 1");
  for (int k = 0; k <= n; ++k) {
    if (rep.betti[static_cast<std::size_t>(k)] != rep.betti[static_cast<std::size_t>(n - k)])
      throw ConsistencyError("Poincare duality fails for b_" + std::to_string(2 * k));
  }
  if (rep.euler != static_cast<long>(f.num_cones()))
    throw ConsistencyError("Euler characteristic " + std::to_string(rep.euler) + " differs from the number of maximal cones");
  if (rep.b2 != rep.num_rays - n) throw ConsistencyError("b_2 differs from d - N");
  return rep;
}

RationalMatrix cup_pairing(const GroebnerBasis& gb, int top_degree, int k) {
  if (k < 0 || k > top_degree) throw std::invalid_argument("cup_pairing: degree out of range");
  const auto socle = standard_monomials(gb, top_degree);
  if (socle.size() != 1) throw ConsistencyError("top degree is not one-dimensional");
  const auto left = standard_monomials(gb, k);
  const auto right = standard_monomials(gb, top_degree - k);
  RationalMatrix m(left.size(), RationalVector(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Polynomial prod = Polynomial::term(left[i] * right[j], Rational(1));
      m[i][j] = normal_form(prod, gb).coefficient(socle.front());
    }
  }
  return m;
}

RationalMatrix cup_pairing(const CohomologyReport& report, int k) {
  return cup_pairing(report.reduced_basis, report.socle_degree, k);
}

Integer squarefree_class(const Rational& q) {
  if (q == 0) throw std::invalid_argument("squarefree_class: zero");
  Integer v = q.get_num() * q.get_den();
  const int sign = sgn(v);
  v = abs(v);
  Integer out = 1;
  for (Integer p = 2; p * p <= v; ++p) {
    int e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      v /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  out *= v;
  return sign * out;
}

Integer intersection_discriminant(const CohomologyReport& report) {
  if (report.dim != 2 || report.b2 > 2) throw std::invalid_argument("intersection_discriminant: needs N = 2 and b2 <= 2");
  const Rational d = determinant(cup_pairing(report, 1));
  if (d == 0) throw ConsistencyError("degenerate intersection pairing");
  return squarefree_class(d);
}

}  // namespace toric
