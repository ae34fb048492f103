#include "toric/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toric {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.exps_.at(i) = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0) throw std::invalid_argument("monomial division is not exact");
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] && b.exps_[i]) return false;
  return true;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!first) os << '*';
    first = false;
    os << names.at(i);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  if (first) os << '1';
  return os.str();
}

const char* to_string(MonomialOrder order) {
  return order == MonomialOrder::kGrevlex ? "grevlex" : "lex";
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("compare: monomial arity mismatch");
  const std::size_t n = a.nvars();
  if (order == MonomialOrder::kLex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Ties: the monomial with the smaller exponent in the last differing variable wins.
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      exps[i] = left;
      out.emplace_back(exps);
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare(a, b, MonomialOrder::kGrevlex) > 0; });
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return term(Monomial::variable(nvars, i), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("add_term: arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

const Monomial& Polynomial::leading_monomial(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (compare(it->first, best->first, order) > 0) best = it;
  return best->first;
}

const Rational& Polynomial::leading_coefficient(MonomialOrder order) const {
  return terms_.at(leading_monomial(order));
}

Polynomial Polynomial::monic(MonomialOrder order) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient(order);
  return *this * inv;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: need one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t = t * images[i];
    out += t;
  }
  return out;
}

void Polynomial::check_arity(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_arity(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
  Polynomial out(p.nvars_);
  for (const auto& [mp, c] : p.terms_) out.terms_.emplace(m * mp, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string(const std::vector<std::string>& names, MonomialOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted_terms(terms_.begin(), terms_.end());
  std::sort(sorted_terms.begin(), sorted_terms.end(),
            [order](const auto& a, const auto& b) { return compare(a.first, b.first, order) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (m.degree() == 0) {
      os << rational_to_string(mag);
    } else {
      if (!unit) os << rational_to_string(mag) << '*';
      os << m.to_string(names);
    }
  }
  return os.str();
}

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* base[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 8 ? base[i] : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace toric
