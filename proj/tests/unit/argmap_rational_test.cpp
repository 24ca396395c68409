#include <gtest/gtest.h>

#include <random>

#include "morsenov/argmap.hpp"
#include "morsenov/error.hpp"

using namespace morsenov;
using namespace morsenov::argmap;

namespace {

const SpherePoint& sphere(const CritPoint& p) { return std::get<SpherePoint>(p.location); }

}  // namespace

TEST(Poly, RootsWithMultiplicity) {
  // (z - 1)^3 (z + 2) z^2
  Poly p({1.0});
  for (cplx r : {cplx(1), cplx(1), cplx(1), cplx(-2), cplx(0), cplx(0)}) p = p * Poly({-r, 1.0});
  const auto roots = find_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  int total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (std::abs(r.value - 1.0) < 1e-6) {
      EXPECT_EQ(r.multiplicity, 3);
    } else if (std::abs(r.value + 2.0) < 1e-6) {
      EXPECT_EQ(r.multiplicity, 1);
    } else {
      EXPECT_EQ(r.value, cplx(0.0));
      EXPECT_EQ(r.multiplicity, 2);
    }
  }
  EXPECT_EQ(total, 6);
}

TEST(Poly, RandomSimpleRoots) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> rs;
    Poly p({1.0});
    for (int k = 0; k < 6; ++k) {
      rs.emplace_back(g(rng), g(rng));
      p = p * Poly({-rs.back(), 1.0});
    }
    const auto roots = find_roots(p);
    ASSERT_EQ(roots.size(), rs.size());
    for (const auto& r : rs) {
      double best = 1e9;
      for (const auto& f : roots) best = std::min(best, std::abs(f.value - r));
      EXPECT_LT(best, 1e-9);
    }
  }
}

TEST(RationalMap, CayleyPowers) {
  for (int n = 1; n <= 8; ++n) {
    const auto pts = crit_points_arg_rational(RationalMap::cayley_power(n));
    if (n == 1) {
      EXPECT_TRUE(pts.empty());
      continue;
    }
    ASSERT_EQ(pts.size(), 2u) << n;
    EXPECT_FALSE(sphere(pts[0]).at_infinity);
    EXPECT_LE(std::abs(sphere(pts[0]).z), 1e-12);
    EXPECT_TRUE(sphere(pts[1]).at_infinity);
    EXPECT_EQ(pts[0].local_degree, n);
    EXPECT_EQ(pts[1].local_degree, n);
    EXPECT_LE(std::abs(pts[0].value - 1.0), 1e-12);
    EXPECT_LE(std::abs(pts[1].value + 1.0), 1e-12);
    EXPECT_EQ(pts[0].morse.degenerate, n > 2);
    if (n == 2) EXPECT_EQ(pts[0].morse.index, 1);
  }
}

TEST(RationalMap, IdentityHasNone) {
  EXPECT_TRUE(crit_points_arg_rational(RationalMap(Poly({0.0, 1.0}), Poly({1.0}))).empty());
}

TEST(RationalMap, Errors) {
  EXPECT_THROW(crit_points_arg_rational(RationalMap(Poly({2.0}), Poly({1.0}))), Error);
  EXPECT_THROW(RationalMap(Poly({1.0}), Poly(std::vector<cplx>{})), Error);
  // shared root z = 1
  EXPECT_THROW(RationalMap(Poly({-1.0, 1.0}), Poly({-1.0, 0.0, 1.0})), Error);
}

TEST(RationalMap, PolynomialCriticalPoints) {
  // R = z^3 - 3z: R' = 3(z^2 - 1), simple roots at +-1; infinity is a pole
  const auto pts = crit_points_arg_rational(RationalMap(Poly({0.0, -3.0, 0.0, 1.0}), Poly({1.0})));
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_NEAR(sphere(pts[0]).z.real(), -1.0, 1e-12);
  EXPECT_NEAR(sphere(pts[1]).z.real(), 1.0, 1e-12);
  for (const auto& p : pts) {
    EXPECT_EQ(p.local_degree, 2);
    EXPECT_EQ(p.morse.index, 1);
    EXPECT_LE(p.residual, 1e-10);
  }
}

TEST(RationalMap, CriticalSetRotatesWithConstant) {
  const auto base = crit_points_arg_rational(RationalMap::cayley_power(3));
  const cplx c = std::polar(2.0, 0.7);
  const auto scaled = crit_points_arg_rational(RationalMap(Poly({c, 0.0, 0.0, c}), Poly({1.0, 0.0, 0.0, -1.0})));
  ASSERT_EQ(scaled.size(), base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_EQ(sphere(scaled[i]).at_infinity, sphere(base[i]).at_infinity);
    EXPECT_LE(std::abs(scaled[i].value - base[i].value * c / std::abs(c)), 1e-12);
  }
}

// P_n(z, theta) = e^{i theta} p_n(z): the theta-derivative of its argument is
// identically 1, so the differential never vanishes.
TEST(RationalMap, SuspensionHasNoCriticalPoints) {
  std::mt19937_64 rng(73);
  std::normal_distribution<double> g;
  const double h = 1e-6;
  for (int n = 1; n <= 8; ++n) {
    const auto r = RationalMap::cayley_power(n);
    for (int i = 0; i < 50; ++i) {
      const cplx z(g(rng), g(rng));
      const double theta = g(rng);
      const cplx v = r.numerator()(z) / r.denominator()(z);
      const double d = std::arg(std::polar(1.0, theta + h) * v / (std::polar(1.0, theta - h) * v)) / (2 * h);
      EXPECT_NEAR(d, 1.0, 1e-8);
    }
  }
}
