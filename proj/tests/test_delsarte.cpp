#include <gtest/gtest.h>

#include "support.hpp"

#include <cohere/delsarte.hpp>

using namespace cohere;
using cohere::testing::random_integer_vector;

namespace {

const Agl15Fixture &fixture()
{
  static const Agl15Fixture fx = agl15_fixture();
  return fx;
}

} // namespace

TEST(OuterDistribution, WorkedExample)
{
  const auto &fx = fixture();
  const auto d = outer_distribution(fx.cc, fx.u);
  const auto a = make_rational(2, 5), b = make_rational(1, 10);
  EXPECT_EQ(d.coefficients, (RationalVector{a, b, b, b, b, a}));
  // (3I + 3A_5 + J)/10
  RationalVector expect(6, make_rational(1, 10));
  expect[0] += make_rational(3, 10);
  expect[5] += make_rational(3, 10);
  EXPECT_EQ(d.dense(fx.cc), expand(fx.cc, expect));
  EXPECT_EQ(distribution_form(fx.cc, d, fx.v), Rational(0));
  EXPECT_EQ(distribution_form(fx.cc, d, fx.w), Rational(4));
}

TEST(OuterDistribution, OfAllOnesIsJ)
{
  for (const auto &[name, g] : cohere::testing::small_transitive_groups()) {
    SCOPED_TRACE(name);
    const auto cc = CoherentConfiguration::of_group(g);
    const auto d = outer_distribution(cc, ones(cc.n()));
    EXPECT_EQ(d.coefficients, RationalVector(cc.rank(), Rational(1)));
  }
}

TEST(ConstantIntersection, FixturePairs)
{
  const auto &fx = fixture();
  const auto uv = constant_intersection_test(fx.cc, fx.u, fx.v);
  ASSERT_TRUE(uv.constant);
  EXPECT_EQ(*uv.value, Rational(0));
  const auto uw = constant_intersection_test(fx.cc, fx.u, fx.w);
  ASSERT_TRUE(uw.constant);
  EXPECT_EQ(*uw.value, Rational(2));
  EXPECT_EQ(uw.lhs, Rational(4));

  const auto seen_v = orbit_inner_products(fx.group, fx.u, fx.v);
  ASSERT_EQ(seen_v.size(), 1u);
  EXPECT_EQ(seen_v[0], std::make_pair(Rational(0), std::size_t{20}));
  const auto seen_w = orbit_inner_products(fx.group, fx.u, fx.w);
  ASSERT_EQ(seen_w.size(), 1u);
  EXPECT_EQ(seen_w[0], std::make_pair(Rational(2), std::size_t{20}));
}

TEST(DesignOrthogonality, FixturePairs)
{
  const auto &fx = fixture();
  const auto ids = central_primitive_idempotents(fx.cc);
  // The pair with lambda = 0 is constant without being design-orthogonal:
  // u Pi_2 u = 12/5 and v Pi_2 v = 40.
  EXPECT_FALSE(is_design_orthogonal(fx.cc, ids, fx.u, fx.v));
  const auto pi2 = *ids.items[2].exact;
  EXPECT_EQ(quadratic_form(pi2, pair_sums(fx.cc, fx.u)), make_rational(12, 5));
  EXPECT_EQ(quadratic_form(pi2, pair_sums(fx.cc, fx.v)), Rational(40));
  EXPECT_EQ(quadratic_form(pi2, pair_sums(fx.cc, fx.w)), Rational(0));
  EXPECT_TRUE(is_design_orthogonal(fx.cc, ids, fx.u, fx.w));
  EXPECT_TRUE(is_design_orthogonal(fx.cc, ids, fx.w, fx.v));
  EXPECT_TRUE(design_orthogonal_implies_constant_check(fx.cc, ids, fx.u, fx.v));
  EXPECT_TRUE(design_orthogonal_implies_constant_check(fx.cc, ids, fx.u, fx.w));
}

TEST(ConstantIntersection, AgreesWithEnumeration)
{
  std::mt19937_64 rng(11);
  for (const auto &[name, g] : cohere::testing::small_transitive_groups()) {
    SCOPED_TRACE(name);
    const auto cc = CoherentConfiguration::of_group(g);
    for (int t = 0; t < 30; ++t) {
      const auto u = random_integer_vector(rng, cc.n(), 0, 1);
      const auto v = random_integer_vector(rng, cc.n(), -1, 2);
      const auto test = constant_intersection_test(cc, u, v);
      const auto seen = orbit_inner_products(g, u, v);
      EXPECT_EQ(test.constant, seen.size() == 1);
      if (test.constant)
        EXPECT_EQ(*test.value, seen[0].first);
    }
  }
}

TEST(DesignOrthogonality, ProjectedPairsAreConstant)
{
  std::mt19937_64 rng(5);
  for (const auto &[name, g] : cohere::testing::small_transitive_groups()) {
    SCOPED_TRACE(name);
    const auto cc = CoherentConfiguration::of_group(g);
    const auto ids = rational_central_idempotents(cc);
    if (ids.size() < 3)
      continue;
    for (int t = 0; t < 10; ++t) {
      const auto x = random_integer_vector(rng, cc.n(), -3, 3), y = random_integer_vector(rng, cc.n(), -3, 3);
      const auto u = cohere::testing::project(cc, ids, {1}, x);
      std::vector<std::size_t> rest;
      for (std::size_t s = 2; s < ids.size(); ++s)
        rest.push_back(s);
      const auto v = cohere::testing::project(cc, ids, rest, y);
      EXPECT_TRUE(is_design_orthogonal(cc, ids, u, v));
      EXPECT_TRUE(constant_intersection_test(cc, u, v).constant);
    }
  }
}

TEST(Psd, OuterDistributions)
{
  std::mt19937_64 rng(3);
  for (const auto &[name, g] : cohere::testing::small_transitive_groups()) {
    SCOPED_TRACE(name);
    const auto cc = CoherentConfiguration::of_group(g);
    for (int t = 0; t < 5; ++t)
      EXPECT_TRUE(psd_check(cc, outer_distribution(cc, random_integer_vector(rng, cc.n(), -4, 4))));
  }
}

TEST(Psd, RejectsIndefinite)
{
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 1;
  EXPECT_FALSE(psd_check(m));
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_TRUE(psd_check(m)); // singular PSD
  m(1, 0) = 0;
  EXPECT_FALSE(psd_check(m)); // not symmetric
  RationalMatrix z(2, 2);
  z(0, 1) = 1;
  z(1, 0) = 1;
  EXPECT_FALSE(psd_check(z));
}

TEST(ProjectionIdentity, FixtureBases)
{
  const auto &fx = fixture();
  const auto a = fx.a_basis();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto x = random_integer_vector(rng, 10, -5, 5), y = random_integer_vector(rng, 10, -5, 5);
    EXPECT_TRUE(projection_identity_check(a, fx.e_basis(), x, y));
    EXPECT_TRUE(projection_identity_check(a, fx.e_basis(true), x, y));
  }
  EXPECT_TRUE(projection_identity_check(a, fx.e_basis(), fx.u, fx.w));
  EXPECT_THROW(projection_identity_check(a, std::vector<Matrix<QSqrt5>>{}, fx.u, fx.w), MissingFixtureBasis);
}
