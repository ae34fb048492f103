#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "oracle/generators.hpp"
#include "oracle/oracles.hpp"
#include "toric/catalog.hpp"
#include "toric/fan.hpp"
#include "toric/lattice.hpp"

using toric::Integer;
using toric::LatticeVector;
using toric::UnimodularMatrix;

namespace {

Integer det2(LatticeVector a, LatticeVector b) {
  std::vector<LatticeVector> vs{std::move(a), std::move(b)};
  return toric::det(vs);
}

}  // namespace

TEST(Lattice, DetExamples) {
  EXPECT_EQ(det2({1, 0}, {0, 1}), 1);
  EXPECT_EQ(det2({0, 1}, {-1, -1}), 1);
  EXPECT_EQ(det2({0, 1}, {-1, -2}), 1);
  EXPECT_EQ(det2({-1, -2}, {1, 0}), 2);
}

TEST(Lattice, DetRejectsNonSquare) {
  std::vector<LatticeVector> vs{{1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW(toric::det(vs), std::invalid_argument);
}

TEST(Lattice, DetMatchesLeibniz) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    std::vector<LatticeVector> cols;
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Integer> v;
      for (std::size_t r = 0; r < n; ++r) {
        m[r][c] = gen::uniform(rng, -6, 6);
        v.emplace_back(m[r][c]);
      }
      cols.emplace_back(v);
    }
    EXPECT_EQ(toric::det(cols), oracle::leibniz_det(m));
  }
}

TEST(Lattice, Primitive) {
  EXPECT_TRUE(toric::is_primitive({1, 0, 0}));
  EXPECT_FALSE(toric::is_primitive({2, 4}));
  EXPECT_TRUE(toric::is_primitive({-1, -1, -1}));
  EXPECT_THROW(toric::is_primitive({0, 0}), std::invalid_argument);
}

TEST(Lattice, UnimodularRejectsSingular) {
  EXPECT_THROW(UnimodularMatrix({{2, 0}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(UnimodularMatrix({{1, 0}, {0}}), std::invalid_argument);
}

TEST(Lattice, InverseAndStandardBasis) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto u = gen::unimodular(rng, n);
    EXPECT_EQ(u * u.inverse(), UnimodularMatrix::identity(n));
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(u.apply(LatticeVector::unit(n, i)));
    const auto t = UnimodularMatrix::to_standard_basis(basis);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(t.apply(basis[i]), LatticeVector::unit(n, i));
  }
}

TEST(Lattice, ApplyUnimodularIdentity) {
  const auto f = toric::catalog("hirzebruch", {3}).fan;
  EXPECT_EQ(toric::apply_unimodular(UnimodularMatrix::identity(2), f), f);
}

TEST(Lattice, ApplyUnimodularShear) {
  const auto f = toric::catalog("cp", {2}).fan;
  const auto g = toric::apply_unimodular(UnimodularMatrix({{1, 1}, {0, 1}}), f);
  ASSERT_EQ(g.num_rays(), 3u);
  EXPECT_EQ(g.rays[0], LatticeVector({1, 0}));
  EXPECT_EQ(g.rays[1], LatticeVector({1, 1}));
  EXPECT_EQ(g.rays[2], LatticeVector({-2, -1}));
  EXPECT_EQ(g.max_cones, f.max_cones);
}

TEST(Lattice, SwapCoordinatesTurnsSurfaceIntoHirzebruch) {
  // rays (1,0),(0,1),(-1,0),(a,-1) with a = 2; swapping coordinates gives
  // (0,1),(1,0),(0,-1),(-1,a), which is Hirzebruch(2) after relabeling.
  const auto f = toric::catalog("surface4", {2, 0}).fan;
  const auto g = toric::apply_unimodular(UnimodularMatrix({{0, 1}, {1, 0}}), f);
  const std::vector<int> perm{1, 0, 3, 2};
  const auto h = toric::relabel_rays(g, perm);
  EXPECT_TRUE(toric::same_fan(h, toric::catalog("hirzebruch", {2}).fan));
}

TEST(Lattice, ApplyUnimodularDimensionMismatch) {
  EXPECT_THROW(toric::apply_unimodular(UnimodularMatrix::identity(3), toric::catalog("cp", {2}).fan),
               std::invalid_argument);
}
