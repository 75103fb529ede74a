#include <gtest/gtest.h>

#include <cohere/constructions.hpp>
#include <cohere/io.hpp>
#include <cohere/perm.hpp>

#include <random>
#include <set>

using namespace cohere;

namespace {

Permutation random_permutation(std::mt19937_64 &rng, std::size_t n)
{
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

} // namespace

TEST(Permutation, ComposesLeftToRight)
{
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ((b * a)[0], 1u);
}

TEST(Permutation, GroupLaws)
{
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_permutation(rng, 9), b = random_permutation(rng, 9), c = random_permutation(rng, 9);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a * Permutation::identity(9), a);
  }
}

TEST(Permutation, RejectsBadInput)
{
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), Error);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 3}}), IndexOutOfRange);
  EXPECT_THROW(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), Error);
  EXPECT_THROW(GeneratorSet(3, {Permutation::identity(4)}), Error);
}

TEST(Orbits, BlocksAndTransitivity)
{
  const GeneratorSet g(6, {Permutation::from_cycles(6, {{0, 1, 2}}), Permutation::from_cycles(6, {{3, 4}})});
  const auto o = orbits(g);
  ASSERT_EQ(o.blocks.size(), 3u);
  EXPECT_EQ(o.blocks[0], (std::vector<Point>{0, 1, 2}));
  EXPECT_EQ(o.blocks[1], (std::vector<Point>{3, 4}));
  EXPECT_EQ(o.blocks[2], (std::vector<Point>{5}));
  EXPECT_FALSE(is_transitive(g));
  EXPECT_THROW(orbitals(g), NotTransitive);
  EXPECT_TRUE(is_transitive(symmetric_group(7)));
}

TEST(Enumeration, GroupOrders)
{
  EXPECT_EQ(enumerate_elements(symmetric_group(5)).size(), 120u);
  EXPECT_EQ(enumerate_elements(alternating_group(5)).size(), 60u);
  EXPECT_EQ(enumerate_elements(agl1(5)).size(), 20u);
  EXPECT_EQ(enumerate_elements(sl25_on_vectors()).size(), 120u);
  EXPECT_EQ(enumerate_elements(cyclic_regular(6)).size(), 6u);
  EXPECT_THROW(enumerate_elements(symmetric_group(6), 100), CapExceeded);
}

TEST(Enumeration, ClosedUnderMultiplication)
{
  const auto elems = enumerate_elements(alternating_group(5));
  const std::set<Permutation> all(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); i += 7)
    for (std::size_t j = 0; j < elems.size(); j += 5)
      EXPECT_TRUE(all.count(elems[i] * elems[j]));
}

TEST(Orbitals, DiagonalFirstAndInvariant)
{
  const auto g = induced_pair_action(agl1(5));
  const auto m = orbitals(g);
  EXPECT_EQ(m.classes, 6u);
  for (std::size_t x = 0; x < m.n; ++x)
    for (std::size_t y = 0; y < m.n; ++y) {
      EXPECT_EQ(m(x, y) == 0, x == y);
      for (const auto &p : g.generators())
        EXPECT_EQ(m(x, y), m(p[x], p[y]));
    }
  // classes are numbered by least row-major representative
  std::vector<std::size_t> first(m.classes, SIZE_MAX);
  for (std::size_t c = 0; c < m.rel.size(); ++c)
    first[m.rel[c]] = std::min(first[m.rel[c]], c);
  EXPECT_TRUE(std::is_sorted(first.begin(), first.end()));
}

TEST(PairAction, LexicographicPairs)
{
  EXPECT_EQ(pair_index(5, 0, 1), 0u);
  EXPECT_EQ(pair_index(5, 0, 4), 3u);
  EXPECT_EQ(pair_index(5, 1, 2), 4u);
  EXPECT_EQ(pair_index(5, 3, 4), 9u);
  EXPECT_EQ(pair_index(5, 4, 3), 9u);
  EXPECT_EQ(two_subsets(7).degree(), 21u);
}

TEST(Action, ImageConvention)
{
  const auto g = Permutation::from_cycles(3, {{0, 1, 2}});
  const RationalVector v = integer_vector({5, 6, 7});
  const auto w = act(g, v);
  EXPECT_EQ(w, integer_vector({7, 5, 6}));
}

TEST(Action, OrbitInnerProducts)
{
  const auto g = symmetric_group(4);
  const auto vals = orbit_inner_products(g, integer_vector({1, 0, 0, 0}), integer_vector({1, 1, 0, 0}));
  ASSERT_EQ(vals.size(), 2u);
  EXPECT_EQ(vals[0], std::make_pair(Rational(0), std::size_t{12}));
  EXPECT_EQ(vals[1], std::make_pair(Rational(1), std::size_t{12}));
  const auto avg = group_average(g, integer_vector({4, 0, 0, 0}));
  EXPECT_EQ(avg, integer_vector({1, 1, 1, 1}));
}

TEST(GroupFile, RoundTrip)
{
  const auto g = sl25_on_vectors();
  const auto text = io::format_group(g, "comment");
  const auto back = io::parse_group(text);
  EXPECT_EQ(back.degree(), g.degree());
  EXPECT_EQ(back.generators(), g.generators());
  EXPECT_EQ(io::format_group(back, "comment"), text);
}

TEST(GroupFile, ParseErrors)
{
  EXPECT_THROW(io::parse_group(""), ParseError);
  EXPECT_THROW(io::parse_group("degree x\n"), ParseError);
  EXPECT_THROW(io::parse_group("(1,2)\n"), ParseError);
  EXPECT_THROW(io::parse_group("degree 3\n(1,4)\n"), ParseError);
  EXPECT_THROW(io::parse_group("degree 3\n(1,2)(2,3)\n"), ParseError);
  const auto g = io::parse_group("# c\ndegree 4\n\n(1,2,3,4)\n");
  EXPECT_EQ(g.generators().front()[3], 0u);
}

TEST(VectorFile, Notations)
{
  EXPECT_EQ(io::parse_vector("{1,3}", 4), integer_vector({1, 0, 1, 0}));
  EXPECT_EQ(io::parse_vector("{1,1,4}", 4), integer_vector({2, 0, 0, 1}));
  EXPECT_EQ(io::parse_vector("1\n-2\n1/2\n0\n", 4),
            (RationalVector{Rational(1), Rational(-2), make_rational(1, 2), Rational(0)}));
  EXPECT_THROW(io::parse_vector("1\n2\n", 4), ParseError);
  EXPECT_THROW(io::parse_vector("{1,5}", 4), Error);
  EXPECT_THROW(io::parse_vector("{1,2", 4), ParseError);
}

TEST(WitnessFile, ExactFormat)
{
  const std::string line = "[ [ 1, 2, 7, 8, 10 ], [ 1, 5, 5, 6, 6, 7, 7, 8, 9, 10 ] ]\n";
  const auto w = io::parse_witness(line);
  EXPECT_EQ(w.set, (std::vector<long>{1, 2, 7, 8, 10}));
  EXPECT_EQ(w.multiset.size(), 10u);
  EXPECT_EQ(io::format_witness(w), line);
  EXPECT_EQ(io::vector_to_labels(io::labels_to_vector(w.multiset, 10)), w.multiset);
  EXPECT_THROW(io::parse_witness("[ [ 1 ] ]"), ParseError);
  EXPECT_THROW(io::parse_witness("[ [ 1 ], [ 2 ], [ 3 ] ]"), ParseError);
}

TEST(Hash, Fnv1a)
{
  EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
