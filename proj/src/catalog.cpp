#include "toric/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "toric/linalg.hpp"

namespace toric {

namespace {

using Columns = std::vector<std::vector<long>>;
using Cones1 = std::vector<std::vector<int>>;

Fan make_fan(int dim, const Columns& rays, const Cones1& cones_one_based) {
  Fan f;
  f.dim = dim;
  for (const auto& r : rays) {
    std::vector<Integer> c(r.begin(), r.end());
    f.rays.emplace_back(std::move(c));
  }
  for (const auto& c : cones_one_based) {
    Cone cone;
    for (int i : c) cone.push_back(i - 1);
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

// Polynomials over a fixed set of display variables.
struct Ring {
  std::size_t n;
  Polynomial v(std::size_t i) const { return Polynomial::variable(n, i); }
  Polynomial c(long k) const { return Polynomial::constant(n, Rational(k)); }
};

// Linear form sum coeff * D_index (1-based) in d variables.
Polynomial d_form(std::size_t d, std::initializer_list<std::pair<long, int>> terms) {
  Polynomial p(d);
  for (const auto& [coeff, index] : terms) p.add_term(Monomial::variable(d, static_cast<std::size_t>(index - 1)), Rational(coeff));
  return p;
}

std::vector<long> poincare_from_betti(const std::vector<long>& betti) {
  std::vector<long> out(2 * betti.size() - 1, 0);
  for (std::size_t k = 0; k < betti.size(); ++k) out[2 * k] = betti[k];
  return out;
}

std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void require_arity(const std::string& name, const std::vector<long>& params, std::size_t n) {
  if (params.size() != n)
    throw std::invalid_argument("catalog " + name + ": expected " + std::to_string(n) + " parameter(s), got " +
                                std::to_string(params.size()));
}

const Cones1 kBundleCones = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 2}, {2, 4, 3}, {2, 5, 4}};
const Cones1 kCase1Cones = {{1, 2, 3}, {2, 6, 3}, {1, 5, 2}, {2, 5, 6}, {1, 4, 5}, {1, 3, 4}, {3, 6, 4}, {4, 6, 5}};
const Cones1 kCase2Cones = {{1, 2, 3}, {1, 3, 4}, {3, 5, 4}, {1, 4, 6}, {1, 6, 2}, {4, 5, 6}, {2, 6, 3}, {3, 6, 5}};

std::size_t case2_arity(long k) {
  switch (k) {
    case 1:
    case 2:
      return 2;
    case 3:
    case 4:
    case 5:
      return 1;
    case 6:
      return 3;
    default:
      throw std::invalid_argument("catalog case2: family must be 1..6, got " + std::to_string(k));
  }
}

// Columns v4, v5, v6 of the second b2 = 3 triangulation; v1..v3 = e1..e3.
Columns case2_columns(long k, const std::vector<long>& p) {
  Columns tail;
  switch (k) {
    case 1:
      tail = {{p[0], -1, p[1]}, {p[0] - 1, -1, p[1]}, {-1, 0, -1}};
      break;
    case 2:
      tail = {{1, -1, 0}, {p[0], -p[0] - 1, p[1]}, {-1, 1, -1}};
      break;
    case 3:
      tail = {{p[0], -1, 0}, {-1, 0, 0}, {-1, 1, -1}};
      break;
    case 4:
      tail = {{1, -1, 0}, {0, -1, 0}, {-1, p[0], -1}};
      break;
    case 5:
      tail = {{0, -1, 0}, {-1, p[0] - 1, 0}, {-1, p[0], -1}};
      break;
    default:
      tail = {{p[0], -1, 0}, {p[1], -1 - p[1] * p[2], 0}, {-1, p[2], -1}};
      break;
  }
  Columns cols = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  cols.insert(cols.end(), tail.begin(), tail.end());
  return cols;
}

// Reads the parameters of family k from normalized columns.
std::vector<long> case2_read(long k, const Columns& c) {
  switch (k) {
    case 1:
      return {c[3][0], c[3][2]};
    case 2:
      return {c[4][0], c[4][2]};
    case 3:
      return {c[3][0]};
    case 4:
    case 5:
      return {c[5][1]};
    default:
      return {c[3][0], c[4][0], c[5][1]};
  }
}

bool case2_identity(const std::vector<long>& t) { return t[0] * (1 + t[1] * t[2]) - t[1] == 1; }

// First family among 1..5 whose instance equals the family-6 matrix at t, or 0.
long case2_covering_family(const std::vector<long>& t) {
  const Columns six = case2_columns(6, t);
  for (long k = 1; k <= 5; ++k)
    if (case2_columns(k, case2_read(k, six)) == six) return k;
  return 0;
}

DisplayedAlgebra case2_display(long k, const std::vector<long>& p) {
  const Ring R{3};
  const auto x = R.v(0), y = R.v(1), z = R.v(2);
  DisplayedAlgebra d;
  d.variables = {"x", "y", "z"};
  d.identification = {d_form(6, {{1, 4}}), d_form(6, {{1, 5}}), d_form(6, {{1, 6}})};
  switch (k) {
    case 1: {
      const long a = p[0], b = p[1];
      d.generators = {x * x + x * y, y * y + x * y, y * y + y * z, x * z * z, (1 - a - b) * (y * y * y) + z * z * z};
      break;
    }
    case 2: {
      const long a = p[0], b = p[1];
      d.generators = {x * y - y * z, (x + (a + 1) * y - z) * x, y * y, (x - b * y) * z * z, (z - (a + b) * y) * z * z};
      break;
    }
    case 3: {
      const long a = p[0];
      d.generators = {(1 - a) * (x * y) + y * y, x * x - x * z, x * y - y * z, x * x * x, y * z * z + z * z * z};
      break;
    }
    case 4: {
      const long a = p[0];
      d.generators = {x * y - y * z, x * x + x * y - a * (x * z), (1 - a) * (x * y) + y * y, x * z * z, z * z * z};
      break;
    }
    case 5: {
      const long a = p[0];
      d.generators = {y * y + y * z, x * x - a * (x * z) + (1 - a) * (x * y), x * y + y * y, x * z * z, y * z * z + z * z * z};
      break;
    }
    default: {
      const long n = p[0], m = p[1], q = p[2];
      d.generators = {(n + m * n * q - m) * (x * y) - y * z, (x + (1 + m * q) * y - q * z) * x, (1 - n * q) * (x * y) + y * y,
                      x * z * z, z * z * z - m * (y * z * z)};
      break;
    }
  }
  return d;
}

Fan cp_fan(long n) {
  if (n < 1) throw std::invalid_argument("catalog cp: N must be >= 1");
  Columns rays;
  for (long i = 0; i < n; ++i) {
    std::vector<long> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(static_cast<std::size_t>(n), -1);
  Cones1 cones;
  for (long omit = n + 1; omit >= 1; --omit) {
    std::vector<int> c;
    for (int i = 1; i <= n + 1; ++i)
      if (i != omit) c.push_back(i);
    cones.push_back(std::move(c));
  }
  return make_fan(static_cast<int>(n), rays, cones);
}

std::vector<long> cp_betti(long n) { return std::vector<long>(static_cast<std::size_t>(n) + 1, 1); }

CatalogEntry build(const std::string& name, const std::vector<long>& params) {
  CatalogEntry e;
  e.family = name;
  e.params = params;

  if (name == "cp") {
    require_arity(name, params, 1);
    const long n = params[0];
    e.fan = cp_fan(n);
    e.expected_poincare = poincare_from_betti(cp_betti(n));
    const Ring R{1};
    DisplayedAlgebra d;
    d.variables = {"x"};
    Polynomial top = R.c(1);
    for (long i = 0; i <= n; ++i) top = top * R.v(0);
    d.generators = {top};
    d.identification = {d_form(static_cast<std::size_t>(n) + 1, {{1, 1}})};
    e.display = d;
    return e;
  }
  if (name == "hirzebruch" || name == "surface4") {
    long a = 0, b = 0;
    if (name == "hirzebruch") {
      require_arity(name, params, 1);
      b = params[0];
    } else {
      require_arity(name, params, 2);
      a = params[0];
      b = params[1];
      if (a * b != 0) throw std::invalid_argument("catalog surface4: requires a*b = 0");
    }
    e.fan = make_fan(2, {{1, 0}, {0, 1}, {-1, b}, {a, -1}}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    e.expected_poincare = std::vector<long>{1, 0, 2, 0, 1};
    if (a == 0) {
      const Ring R{2};
      const auto x = R.v(0), y = R.v(1);
      DisplayedAlgebra d;
      d.variables = {"x", "y"};
      d.generators = {x * x, y * (y + b * x)};
      d.identification = {d_form(4, {{1, 1}}), d_form(4, {{1, 2}})};
      e.display = d;
    }
    return e;
  }
  if (name == "bundle_cp2") {
    require_arity(name, params, 1);
    const long c = params[0];
    e.fan = make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, c}, {0, 0, -1}}, kBundleCones);
    e.expected_poincare = std::vector<long>{1, 0, 2, 0, 2, 0, 1};
    const Ring R{2};
    const auto x = R.v(0), y = R.v(1);
    DisplayedAlgebra d;
    d.variables = {"x", "y"};
    d.generators = {x * x * x, y * (y + c * x)};
    d.identification = {d_form(5, {{1, 4}}), d_form(5, {{1, 3}})};
    e.display = d;
    return e;
  }
  if (name == "bundle_cp1") {
    require_arity(name, params, 2);
    const long a = params[0], b = params[1];
    e.fan = make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {a, b, -1}}, kBundleCones);
    e.expected_poincare = std::vector<long>{1, 0, 2, 0, 2, 0, 1};
    const Ring R{2};
    const auto x = R.v(0), y = R.v(1);
    DisplayedAlgebra d;
    d.variables = {"x", "y"};
    d.generators = {x * x, y * (y + a * x) * (y + b * x)};
    d.identification = {d_form(5, {{-1, 5}}), d_form(5, {{1, 4}})};
    e.display = d;
    return e;
  }
  if (name == "case1") {
    require_arity(name, params, 3);
    const long a = params[0], b = params[1], dd = params[2];
    e.fan = make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {a, -1, b}, {dd, 0, -1}, {-1, 0, 0}}, kCase1Cones);
    e.expected_poincare = std::vector<long>{1, 0, 3, 0, 3, 0, 1};
    const Ring R{3};
    const auto x = R.v(0), y = R.v(1), z = R.v(2);
    DisplayedAlgebra d;
    d.variables = {"x", "y", "z"};
    d.generators = {x * x, y * (y - b * x), z * (z - a * x - dd * y)};
    d.identification = {d_form(6, {{1, 4}}), d_form(6, {{1, 5}}), d_form(6, {{1, 6}})};
    e.display = d;
    return e;
  }
  if (name == "case2") {
    if (params.empty()) throw std::invalid_argument("catalog case2: missing family index");
    const long k = params[0];
    const std::vector<long> p(params.begin() + 1, params.end());
    if (p.size() != case2_arity(k))
      throw std::invalid_argument("catalog case2: family " + std::to_string(k) + " takes " +
                                  std::to_string(case2_arity(k)) + " parameter(s)");
    if (k == 6) {
      if (!case2_identity(p)) throw std::invalid_argument("catalog case2: (n,m,p) violates n(1+mp)-m = 1");
      const auto& five = case2_family6_triples();
      if (std::find(five.begin(), five.end(), p) == five.end())
        throw std::invalid_argument("catalog case2: (n,m,p) is an instance of family " +
                                    std::to_string(case2_covering_family(p)) + ", not one of the isolated triples");
    }
    e.fan = make_fan(3, case2_columns(k, p), kCase2Cones);
    e.expected_verdict = Verdict::kHyperbolic;
    e.expected_poincare = std::vector<long>{1, 0, 3, 0, 3, 0, 1};
    e.display = case2_display(k, p);
    return e;
  }
  if (name == "cp_product") {
    if (params.empty()) throw std::invalid_argument("catalog cp_product: needs at least one factor");
    Fan f = cp_fan(params[0]);
    std::vector<long> poincare = poincare_from_betti(cp_betti(params[0]));
    for (std::size_t i = 1; i < params.size(); ++i) {
      f = product(f, cp_fan(params[i]));
      poincare = multiply(poincare, poincare_from_betti(cp_betti(params[i])));
    }
    e.fan = f;
    e.expected_poincare = poincare;
    const std::size_t n = params.size();
    const Ring R{n};
    DisplayedAlgebra d;
    d.variables = default_variable_names(n);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial top = R.c(1);
      for (long j = 0; j <= params[i]; ++j) top = top * R.v(i);
      d.generators.push_back(top);
      Polynomial id(f.num_rays());
      id.add_term(Monomial::variable(f.num_rays(), offset), Rational(1));
      d.identification.push_back(id);
      offset += static_cast<std::size_t>(params[i]) + 1;
    }
    e.display = d;
    return e;
  }
  if (name == "blowup_cpN" || name == "blowup_cp2") {
    long n = 2;
    if (name == "blowup_cpN") {
      require_arity(name, params, 1);
      n = params[0];
    } else {
      require_arity(name, params, 0);
    }
    if (n < 2) throw std::invalid_argument("catalog blowup_cpN: N must be >= 2");
    const Fan base = cp_fan(n);
    e.fan = star_subdivide(base, base.max_cones.front());
    std::vector<long> betti(static_cast<std::size_t>(n) + 1, 2);
    betti.front() = betti.back() = 1;
    e.expected_poincare = poincare_from_betti(betti);
    const Ring R{2};
    const auto x = R.v(0), y = R.v(1);
    Polynomial xn = R.c(1), yn = R.c(1);
    for (long i = 0; i < n; ++i) {
      xn = xn * x;
      yn = yn * y;
    }
    DisplayedAlgebra d;
    d.variables = {"x", "y"};
    d.generators = {x * y, xn + yn};
    const std::size_t dd = static_cast<std::size_t>(n) + 2;
    d.identification = {d_form(dd, {{1, static_cast<int>(n) + 1}}), d_form(dd, {{-1, static_cast<int>(n) + 2}})};
    e.display = d;
    return e;
  }
  if (name == "blowup2_cp3") {
    require_arity(name, params, 0);
    const Fan base = cp_fan(3);
    Fan once = star_subdivide(base, Cone{0, 1, 2});
    e.fan = star_subdivide(once, Cone{0, 1, 3});
    e.expected_verdict = Verdict::kHyperbolic;
    e.expected_poincare = std::vector<long>{1, 0, 3, 0, 3, 0, 1};
    const Ring R{3};
    const auto x = R.v(0), y = R.v(1), z = R.v(2);
    DisplayedAlgebra d;
    d.variables = {"x", "y", "z"};
    d.generators = {x * y, x * z, y * z, x * x * x - y * y * y, x * x * x - z * z * z};
    d.identification = {d_form(6, {{1, 3}, {1, 5}}), d_form(6, {{1, 5}}), d_form(6, {{1, 6}})};
    e.display = d;
    return e;
  }
  throw std::invalid_argument("catalog: unknown family '" + name + "'");
}

}  // namespace

std::vector<std::string> DisplayedAlgebra::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_string(variables));
  return out;
}

std::vector<std::string> DisplayedAlgebra::identification_strings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < identification.size(); ++i) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < identification[i].nvars(); ++j) names.push_back("D" + std::to_string(j + 1));
    out.push_back(variables[i] + " = " + identification[i].to_string(names));
  }
  return out;
}

const std::vector<FamilyInfo>& catalog_families() {
  static const std::vector<FamilyInfo> families = {
      {"cp", {"N"}, "complex projective space CP^N"},
      {"hirzebruch", {"b"}, "Hirzebruch surface, rays (1,0),(0,1),(-1,b),(0,-1)"},
      {"surface4", {"a", "b"}, "4-ray surface, rays (1,0),(0,1),(-1,b),(a,-1), a*b = 0"},
      {"bundle_cp2", {"c"}, "P(O + O(c)) over CP^2"},
      {"bundle_cp1", {"a", "b"}, "P(O + O(a) + O(b)) over CP^1"},
      {"case1", {"a", "b", "d"}, "CP^1-bundle over a Hirzebruch surface (first b2=3 triangulation)"},
      {"case2", {"k", "params..."}, "second b2=3 triangulation, family k = 1..6"},
      {"cp_product", {"N1", "N2", "..."}, "product of projective spaces"},
      {"blowup_cpN", {"N"}, "CP^N blown up at a fixed point"},
      {"blowup_cp2", {}, "CP^2 blown up at a fixed point"},
      {"blowup2_cp3", {}, "CP^3 blown up at two fixed points"},
  };
  return families;
}

int family_arity(const std::string& name, const std::vector<long>& params) {
  if (name == "cp" || name == "hirzebruch" || name == "bundle_cp2" || name == "blowup_cpN") return 1;
  if (name == "surface4" || name == "bundle_cp1") return 2;
  if (name == "case1") return 3;
  if (name == "blowup_cp2" || name == "blowup2_cp3") return 0;
  if (name == "cp_product") return -1;
  if (name == "case2") {
    if (params.empty()) return -1;
    return 1 + static_cast<int>(case2_arity(params[0]));
  }
  throw std::invalid_argument("catalog: unknown family '" + name + "'");
}

CatalogEntry catalog(const std::string& name, const std::vector<long>& params) { return build(name, params); }

bool display_matches(const DisplayedAlgebra& display, const GradedPresentation& reduced) {
  const std::size_t n = reduced.nvars();
  if (display.identification.size() != n || display.variables.size() != n) return false;
  std::vector<Polynomial> images;
  RationalMatrix rows;
  for (const auto& id : display.identification) {
    if (id.nvars() != reduced.substitution.size()) return false;
    Polynomial img = id.substitute(reduced.substitution);
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = img.coefficient(Monomial::variable(n, j));
    rows.push_back(std::move(row));
    images.push_back(std::move(img));
  }
  if (rank(rows) != n) return false;
  std::vector<Polynomial> pulled;
  for (const auto& g : display.generators) pulled.push_back(g.substitute(images));
  return buchberger(pulled, n) == buchberger(reduced.generators, n);
}

const std::vector<std::vector<long>>& case2_family6_triples() {
  static const std::vector<std::vector<long>> triples = {
      {-1, 1, -3}, {-2, 1, -2}, {-1, 2, -2}, {-3, 2, -1}, {-2, 3, -1}};
  return triples;
}

std::vector<std::vector<long>> isolated_case2_triples(long bound) {
  std::vector<std::vector<long>> out;
  for (long n = -bound; n <= bound; ++n)
    for (long m = -bound; m <= bound; ++m)
      for (long p = -bound; p <= bound; ++p) {
        const std::vector<long> t{n, m, p};
        if (case2_identity(t) && case2_covering_family(t) == 0) out.push_back(t);
      }
  return out;
}

std::vector<long> projective_product_poincare(const std::vector<int>& betas) {
  std::vector<long> out{1};
  for (int b : betas) out = multiply(out, poincare_from_betti(cp_betti(b - 1)));
  return out;
}

}  // namespace toric
