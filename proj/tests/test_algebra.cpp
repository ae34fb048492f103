#include <gtest/gtest.h>

#include <vector>

#include "oracle/generators.hpp"
#include "oracle/oracles.hpp"
#include "toric/groebner.hpp"
#include "toric/linalg.hpp"
#include "toric/polynomial.hpp"

using toric::GroebnerBasis;
using toric::Monomial;
using toric::MonomialOrder;
using toric::Polynomial;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

std::vector<std::vector<int>> exps(const std::vector<Monomial>& ms) {
  std::vector<std::vector<int>> out;
  for (const auto& m : ms) out.push_back(m.exponents());
  return out;
}

std::vector<Polynomial> two_point_blowup_ideal() {
  const auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  return {x * y, x * z, y * z, x * x * x - y * y * y, x * x * x - z * z * z};
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const auto x = var(2, 0), y = var(2, 1);
  EXPECT_EQ((x + y) + (x - y), 2 * x);
  EXPECT_EQ(y * (y + 1 * x), y * y + x * y);
  EXPECT_EQ(y * (y + 1 * x) * (y + 2 * x), y * y * y + 3 * (x * y * y) + 2 * (x * x * y));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x * x + x * y).to_string({"x", "y"}), "x^2 + x*y");
  EXPECT_EQ((toric::Rational(-3, 2) * (x * y) + y * y).to_string({"x", "y"}), "-3/2*x*y + y^2");
}

TEST(Polynomial, GrevlexCompare) {
  const Monomial x2({2, 0}), xy({1, 1}), x({1, 0}), y2({0, 2});
  EXPECT_EQ(toric::compare(x2, xy, MonomialOrder::kGrevlex), std::strong_ordering::greater);
  EXPECT_EQ(toric::compare(y2, x, MonomialOrder::kGrevlex), std::strong_ordering::greater);
  EXPECT_EQ(toric::compare(Monomial({1, 1, 0}), Monomial({0, 0, 2}), MonomialOrder::kGrevlex),
            std::strong_ordering::greater);
  // grevlex and lex differ on xz vs y^2.
  EXPECT_EQ(toric::compare(Monomial({1, 0, 1}), Monomial({0, 2, 0}), MonomialOrder::kGrevlex),
            std::strong_ordering::less);
  EXPECT_EQ(toric::compare(Monomial({1, 0, 1}), Monomial({0, 2, 0}), MonomialOrder::kLex),
            std::strong_ordering::greater);
}

TEST(Polynomial, MonomialsOfDegreeAreDescending) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      const auto ms = toric::monomials_of_degree(n, k);
      EXPECT_EQ(ms.size(), oracle::monomials(n, k).size());
      for (std::size_t i = 1; i < ms.size(); ++i)
        EXPECT_EQ(toric::compare(ms[i - 1], ms[i], MonomialOrder::kGrevlex), std::strong_ordering::greater);
    }
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = gen::homogeneous(rng, 3, 2, 4);
    const auto b = gen::homogeneous(rng, 3, 1, 3);
    const auto c = gen::homogeneous(rng, 3, 1, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Groebner, NormalFormExamples) {
  const auto x = var(2, 0), y = var(2, 1);
  const std::vector<Polynomial> xsq{x * x};
  EXPECT_TRUE(toric::normal_form(x * x * x, toric::buchberger(xsq, 2)).is_zero());
  // With x > y the leading term of y^2 + xy is xy, so y^2 is standard and
  // xy reduces to -y^2.
  const std::vector<Polynomial> h{x * x, y * y + x * y};
  EXPECT_EQ(toric::normal_form(y * y, toric::buchberger(h, 2)), y * y);
  EXPECT_EQ(toric::normal_form(x * y, toric::buchberger(h, 2)), -(y * y));
  const std::vector<Polynomial> cubic{x * x * x};
  EXPECT_EQ(toric::normal_form(x * x * y, toric::buchberger(cubic, 2)), x * x * y);
}

TEST(Groebner, BuchbergerExamples) {
  const auto x = var(2, 0), y = var(2, 1);
  const std::vector<Polynomial> coprime{x * x, y * y};
  const auto g = toric::buchberger(coprime, 2);
  EXPECT_EQ(g.generators(), (std::vector<Polynomial>{y * y, x * x}));

  const std::vector<Polynomial> h{x * x, y * y + x * y};
  const auto gh = toric::buchberger(h, 2);
  std::vector<Monomial> standard;
  for (int k = 0; k <= 4; ++k)
    for (const auto& m : toric::standard_monomials(gh, k)) standard.push_back(m);
  EXPECT_EQ(exps(standard), (std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {0, 2}}));

  // x^3 = y^3 = z^3 in the quotient; z^3 is the standard representative.
  const auto blowup_gens = two_point_blowup_ideal();
  const auto g6 = toric::buchberger(blowup_gens, 3);
  std::vector<Monomial> std6;
  for (int k = 0; k <= 5; ++k)
    for (const auto& m : toric::standard_monomials(g6, k)) std6.push_back(m);
  EXPECT_EQ(exps(std6), (std::vector<std::vector<int>>{
                            {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 0, 3}}));

  EXPECT_EQ(toric::buchberger(std::vector<Polynomial>{}, 2).size(), 0u);
}

TEST(Groebner, BasisIsReducedAndClosed) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(gen::homogeneous(rng, n, static_cast<int>(gen::uniform(rng, 2, 3)), 3));
    const auto g = toric::buchberger(gens, n);
    for (const auto& p : gens) EXPECT_TRUE(g.contains(p));
    const auto lms = g.leading_monomials();
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g.generators()[i].leading_coefficient(MonomialOrder::kGrevlex), 1);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        for (const auto& [m, c] : g.generators()[j].terms()) EXPECT_FALSE(lms[i].divides(m));
      }
      // S-polynomials reduce to zero.
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const auto l = lcm(lms[i], lms[j]);
        const auto s = Polynomial::term(l / lms[i], 1) * g.generators()[i] -
                       Polynomial::term(l / lms[j], 1) * g.generators()[j];
        EXPECT_TRUE(toric::normal_form(s, g).is_zero());
      }
    }
    // Hilbert function agrees with the brute-force oracle.
    EXPECT_EQ(toric::hilbert_function(g, 5), oracle::hilbert_function(gens, n, 5));
  }
}

TEST(Groebner, HilbertFunctionExamples) {
  const std::vector<Polynomial> cubic{var(1, 0) * var(1, 0) * var(1, 0)};
  EXPECT_EQ(toric::hilbert_function(toric::buchberger(cubic, 1), 4), (std::vector<long>{1, 1, 1, 0, 0}));
  const auto x = var(2, 0), y = var(2, 1);
  const std::vector<Polynomial> h{x * x, y * y + x * y};
  EXPECT_EQ(toric::hilbert_function(toric::buchberger(h, 2), 4), (std::vector<long>{1, 2, 1, 0, 0}));
  EXPECT_EQ(toric::hilbert_function(toric::buchberger(two_point_blowup_ideal(), 3), 5), (std::vector<long>{1, 3, 3, 1, 0, 0}));
}

TEST(Groebner, GradedIdealDimension) {
  const std::vector<Polynomial> cubic{var(1, 0) * var(1, 0) * var(1, 0)};
  EXPECT_EQ(toric::graded_ideal_dimension(cubic, 1, 3), 1);
  const auto x = var(2, 0), y = var(2, 1);
  const std::vector<Polynomial> h{x * x, y * y + x * y};
  EXPECT_EQ(toric::graded_ideal_dimension(h, 2, 2), 2);
  EXPECT_EQ(toric::graded_ideal_dimension(two_point_blowup_ideal(), 3, 2), 3);
  EXPECT_EQ(toric::graded_ideal_dimension(two_point_blowup_ideal(), 3, 3), 9);
}

TEST(Groebner, DegreeBounds) {
  const auto g = toric::buchberger(two_point_blowup_ideal(), 3);
  EXPECT_EQ(toric::socle_degree(g), 3);
  ASSERT_TRUE(toric::quotient_degree_bound(g).has_value());
  EXPECT_GE(*toric::quotient_degree_bound(g), 3);
  const std::vector<Polynomial> xy{var(2, 0) * var(2, 1)};
  EXPECT_FALSE(toric::quotient_degree_bound(toric::buchberger(xy, 2)).has_value());
}

TEST(Linalg, RankAndDeterminant) {
  toric::RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(toric::rank(m), 2u);
  EXPECT_EQ(toric::determinant(m), 0);
  EXPECT_EQ(toric::determinant({{2, 1}, {1, 1}}), 1);
  toric::RowSpace rs(3);
  EXPECT_TRUE(rs.insert({1, 0, 1}));
  EXPECT_FALSE(rs.insert({2, 0, 2}));
  EXPECT_TRUE(rs.contains({3, 0, 3}));
  EXPECT_FALSE(rs.contains({0, 1, 0}));
}
