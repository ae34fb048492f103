#include "toric/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace toric {

namespace {

// Full reduction of p by a list of monic polynomials (leading monomials
// precomputed).
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& divisors,
                     const std::vector<Monomial>& leads, MonomialOrder order) {
  Polynomial rest = p;
  Polynomial remainder(p.nvars());
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial(order);
    const Rational lc = rest.coefficient(lm);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].divides(lm)) {
        rest -= (lm / leads[i]) * (divisors[i] * lc);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Monomial& lf, const Polynomial& g, const Monomial& lg) {
  // Both inputs are monic.
  const Monomial l = lcm(lf, lg);
  return (l / lf) * f - (l / lg) * g;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_monomial(order_));
  return out;
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.leading_monomial(order_).divides(m)) return false;
  return true;
}

bool GroebnerBasis::contains(const Polynomial& p) const { return normal_form(p, *this).is_zero(); }

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw std::invalid_argument("normal_form: arity mismatch");
  return reduce_by(p, gb.generators(), gb.leading_monomials(), gb.order());
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, std::size_t nvars, MonomialOrder order) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("buchberger: arity mismatch");
    if (g.is_zero()) continue;
    Polynomial r = reduce_by(g.monic(order), basis, leads, order);
    if (r.is_zero()) continue;
    r = r.monic(order);
    leads.push_back(r.leading_monomial(order));
    basis.push_back(std::move(r));
  }

  // Normal strategy: smallest lcm degree first, ties broken by pair indices.
  using Pair = std::tuple<int, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  auto add_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(leads[i], leads[j])) continue;
      pairs.emplace(lcm(leads[i], leads[j]).degree(), i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_with(j);

  while (!pairs.empty()) {
    const auto [deg, i, j] = pairs.top();
    pairs.pop();
    Polynomial s = s_polynomial(basis[i], leads[i], basis[j], leads[j]);
    Polynomial r = reduce_by(s, basis, leads, order);
    if (r.is_zero()) continue;
    r = r.monic(order);
    leads.push_back(r.leading_monomial(order));
    basis.push_back(std::move(r));
    add_pairs_with(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      // Equal leading monomials: keep the earlier one.
      redundant = !(leads[i] == leads[j]) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    minimal_leads.push_back(leads[i]);
  }

  // Inter-reduce the tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<Monomial> other_leads;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_leads.push_back(minimal_leads[j]);
    }
    const Monomial& lm = minimal_leads[i];
    Polynomial tail = minimal[i];
    tail.add_term(lm, -tail.coefficient(lm));
    Polynomial g = reduce_by(tail, others, other_leads, order);
    g.add_term(lm, Rational(1));
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(order), b.leading_monomial(order), order) < 0;
  });
  return GroebnerBasis(nvars, order, std::move(reduced));
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int k) {
  const auto leads = gb.leading_monomials();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(gb.nvars(), k)) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

std::vector<long> hilbert_function(const GroebnerBasis& gb, int up_to) {
  std::vector<long> out;
  for (int k = 0; k <= up_to; ++k) out.push_back(static_cast<long>(standard_monomials(gb, k).size()));
  return out;
}

long graded_ideal_dimension(std::span<const Polynomial> gens, std::size_t nvars, int k) {
  for (const auto& g : gens)
    if (!g.is_zero() && !g.is_homogeneous()) throw std::invalid_argument("graded_ideal_dimension: generators must be homogeneous");
  const GroebnerBasis gb = buchberger(gens, nvars);
  return static_cast<long>(monomials_of_degree(nvars, k).size()) - hilbert_function(gb, k).back();
}

std::optional<int> quotient_degree_bound(const GroebnerBasis& gb) {
  std::vector<int> power(gb.nvars(), -1);
  for (const auto& m : gb.leading_monomials()) {
    if (m.degree() == 0) return 0;  // unit ideal
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i]) {
        ++nonzero;
        var = i;
      }
    if (nonzero == 1 && (power[var] < 0 || m[var] < power[var])) power[var] = m[var];
  }
  int bound = 0;
  for (int e : power) {
    if (e < 0) return std::nullopt;
    bound += e - 1;
  }
  return bound;
}

std::optional<int> socle_degree(const GroebnerBasis& gb) {
  const auto bound = quotient_degree_bound(gb);
  if (!bound) return std::nullopt;
  const auto hf = hilbert_function(gb, *bound);
  for (int k = *bound; k >= 0; --k)
    if (hf[static_cast<std::size_t>(k)] != 0) return k;
  return std::nullopt;  // zero quotient
}

}  // namespace toric
