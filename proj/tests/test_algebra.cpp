#include <gtest/gtest.h>

#include "support.hpp"

#include <cohere/algebra.hpp>
#include <cohere/poly.hpp>
#include <cohere/qsqrt5.hpp>

#include <numeric>

using namespace cohere;

namespace {

RationalVector basis_vector(std::size_t d, std::size_t i)
{
  RationalVector e(d, Rational(0));
  e[i] = 1;
  return e;
}

void expect_idempotent_set(const CoherentConfiguration &cc, const CentralIdempotentSet &ids)
{
  ASSERT_TRUE(ids.exact);
  const std::size_t D = cc.rank();
  RationalVector total(D, Rational(0));
  for (std::size_t s = 0; s < ids.size(); ++s) {
    const auto &e = *ids.items[s].exact;
    EXPECT_EQ(algebra_multiply(cc, e, e), e);
    EXPECT_TRUE(is_central(cc, e));
    for (std::size_t t = s + 1; t < ids.size(); ++t)
      EXPECT_EQ(algebra_multiply(cc, e, *ids.items[t].exact), RationalVector(D, Rational(0)));
    for (std::size_t i = 0; i < D; ++i)
      total[i] += e[i];
  }
  EXPECT_EQ(total, basis_vector(D, 0));
  // the principal idempotent J/n comes first
  EXPECT_EQ(*ids.items[0].exact, RationalVector(D, make_rational(1, static_cast<long>(cc.n()))));
}

} // namespace

TEST(Rationals, Canonical)
{
  EXPECT_EQ(make_rational(0, 10), Rational(0));
  EXPECT_EQ(make_rational(2, 4), make_rational(1, 2));
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational(" 3/6 "), make_rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_EQ(*reconstruct_rational(0.3333333333333333L), make_rational(1, 3));
}

TEST(QuadraticField, Arithmetic)
{
  const auto r = QSqrt5::sqrt5();
  EXPECT_EQ(r * r, QSqrt5(5));
  const QSqrt5 phi(make_rational(1, 2), make_rational(1, 2));
  EXPECT_EQ(phi * phi, phi + QSqrt5(1));
  EXPECT_EQ(phi / phi, QSqrt5(1));
  EXPECT_EQ(phi.norm(), Rational(-1));
  EXPECT_EQ(phi * phi.conjugate(), QSqrt5(-1));
}

TEST(Polynomials, FactorOverQ)
{
  // (x - 1)(x^4 + x^3 + x^2 + x + 1) = x^5 - 1
  poly::Poly p{Rational(-1), 0, 0, 0, 0, Rational(1)};
  const auto f = poly::factor_over_q(p);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(poly::degree(f.factors[0].poly) + poly::degree(f.factors[1].poly), 5);
  // (x^2 - 5)(x - 3)
  poly::Poly q = poly::mul({Rational(-5), 0, Rational(1)}, {Rational(-3), Rational(1)});
  const auto g = poly::factor_over_q(q);
  ASSERT_EQ(g.factors.size(), 2u);
  const auto [quo, rem] = poly::divmod(q, g.factors[0].poly);
  EXPECT_TRUE(rem.empty() || std::all_of(rem.begin(), rem.end(), [](const Rational &c) { return c == 0; }));
}

TEST(Algebra, CenterAndSplitOfAgl)
{
  const auto cc = CoherentConfiguration::of_group(induced_pair_action(agl1(5)));
  EXPECT_EQ(center_basis(cc).dimension(), 3u);
  const auto ids = central_primitive_idempotents(cc);
  expect_idempotent_set(cc, ids);
  EXPECT_EQ(isotypic_dimensions(ids), (std::vector<long>{1, 1, 8}));
  // E_1 = (I - A_1 - A_2 + A_3 + A_4 - A_5)/10
  const auto t = make_rational(1, 10);
  EXPECT_EQ(*ids.items[1].exact, (RationalVector{t, -t, -t, t, t, -t}));
  const auto rat = rational_central_idempotents(cc);
  EXPECT_EQ(isotypic_dimensions(rat), (std::vector<long>{1, 1, 8}));
}

TEST(Algebra, CyclicSplitsDiffer)
{
  const auto cc = CoherentConfiguration::of_group(cyclic_regular(5));
  const auto complex_split = central_primitive_idempotents(cc);
  EXPECT_EQ(complex_split.size(), 5u);
  EXPECT_FALSE(complex_split.exact);
  EXPECT_EQ(isotypic_dimensions(complex_split), (std::vector<long>{1, 1, 1, 1, 1}));
  const auto rat = rational_central_idempotents(cc);
  EXPECT_EQ(rat.size(), 2u);
  expect_idempotent_set(cc, rat);
  EXPECT_EQ(isotypic_dimensions(rat), (std::vector<long>{1, 4}));
}

TEST(Algebra, SeedsGiveTheSameSplit)
{
  const auto cc = CoherentConfiguration::of_group(sl25_on_vectors());
  IdempotentOptions a, b;
  a.seed = 1;
  b.seed = 99;
  const auto x = rational_central_idempotents(cc, a), y = rational_central_idempotents(cc, b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t s = 0; s < x.size(); ++s)
    EXPECT_EQ(*x.items[s].exact, *y.items[s].exact);
}

TEST(Algebra, IdempotentPropertiesAcrossGroups)
{
  for (const auto &[name, g] : cohere::testing::small_transitive_groups()) {
    SCOPED_TRACE(name);
    const auto cc = CoherentConfiguration::of_group(g);
    const auto rat = rational_central_idempotents(cc);
    expect_idempotent_set(cc, rat);
    const auto dims = isotypic_dimensions(rat);
    EXPECT_EQ(std::accumulate(dims.begin(), dims.end(), 0L), static_cast<long>(cc.n()));
    const auto cpx = central_primitive_idempotents(cc);
    EXPECT_EQ(cpx.size(), center_basis(cc).dimension());
    EXPECT_GE(cpx.size(), rat.size());
    if (cc.is_commutative())
      EXPECT_EQ(center_basis(cc).dimension(), cc.rank());
  }
}

TEST(Algebra, MinimalPolynomial)
{
  const auto cc = CoherentConfiguration::of_group(induced_pair_action(alternating_group(5)));
  // class 2 is the Petersen graph: eigenvalues 3, 1, -2
  const auto m = minimal_polynomial(cc, basis_vector(3, 2));
  EXPECT_EQ(m, poly::mul(poly::mul({Rational(-3), Rational(1)}, {Rational(-1), Rational(1)}),
                         {Rational(2), Rational(1)}));
  EXPECT_EQ(evaluate(cc, m, basis_vector(3, 2)), RationalVector(3, Rational(0)));
  // its complement has eigenvalues 6, 1, -2
  EXPECT_EQ(minimal_polynomial(cc, basis_vector(3, 1)),
            poly::mul(poly::mul({Rational(-6), Rational(1)}, {Rational(-1), Rational(1)}), {Rational(2), Rational(1)}));
}

TEST(Matrices, RankAndNullspace)
{
  RationalMatrix m(3, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(2, 2) = 3;
  EXPECT_EQ(m.rank(), 2u);
  const auto null = m.nullspace();
  ASSERT_EQ(null.size(), 1u);
  EXPECT_EQ(null[0][0] + 2 * null[0][1], Rational(0));
  EXPECT_EQ((m * RationalMatrix::identity(3)), m);
  EXPECT_EQ(m.transpose().transpose(), m);
}
