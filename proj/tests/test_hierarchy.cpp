#include <gtest/gtest.h>

#include "support.hpp"

#include <cohere/hierarchy.hpp>

#include <algorithm>

using namespace cohere;

namespace {

struct Setup
{
  GeneratorSet g;
  CoherentConfiguration cc;
  CentralIdempotentSet ids;

  explicit Setup(GeneratorSet group)
  : g(std::move(group)), cc(CoherentConfiguration::of_group(g)), ids(rational_central_idempotents(cc))
  {}
};

const Setup &a5_pairs()
{
  static const Setup s(induced_pair_action(alternating_group(5)));
  return s;
}

RationalVector labels(std::vector<long> l, std::size_t n) { return io::labels_to_vector(l, n); }

} // namespace

TEST(Levels, Names)
{
  for (auto l : {Level::NonQI, Level::NonSpreading, Level::NonSeparating, Level::NonSynchronising})
    EXPECT_EQ(parse_level(level_name(l)), l);
  EXPECT_EQ(parse_level("synchronizing"), Level::NonSynchronising);
  EXPECT_THROW(parse_level("primitive"), ParseError);
}

TEST(Nontrivial, Definition)
{
  EXPECT_FALSE(is_nontrivial(integer_vector({1, 1, 1})));
  EXPECT_FALSE(is_nontrivial(integer_vector({0, 0, 1})));
  EXPECT_TRUE(is_nontrivial(integer_vector({0, 1, 1})));
  EXPECT_TRUE(is_nontrivial(integer_vector({2, 1, 1})));
  EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
}

TEST(Verify, StoredWitness)
{
  const auto &s = a5_pairs();
  const auto u = labels({1, 2, 7, 8, 10}, 10), w = labels({1, 5, 5, 6, 6, 7, 7, 8, 9, 10}, 10);
  const auto v = verify_nonspreading(s.cc, s.ids, u, w);
  ASSERT_TRUE(v.accepted()) << v.detail;
  EXPECT_EQ(v.witness->certificate.lambda, Rational(5));
  EXPECT_EQ(oracle_confirms(s.g, *v.witness, default_enum_cap), std::optional<bool>(true));
  EXPECT_EQ(oracle_confirms(s.g, *v.witness, 10), std::nullopt);
  EXPECT_TRUE(verify_nonqi(s.cc, s.ids, u, w).accepted());

  const auto scaled = normalize_witness(w, 10);
  EXPECT_EQ(sum(scaled), Rational(10));
  EXPECT_TRUE(verify_nonspreading(s.cc, s.ids, u, scaled).accepted());
  EXPECT_THROW(normalize_witness(labels({1, 2, 3}, 10), 10), DivisibilityFails);
}

TEST(Verify, RejectionReasons)
{
  const auto &s = a5_pairs();
  const auto u = labels({1, 2, 7, 8, 10}, 10), w = labels({1, 5, 5, 6, 6, 7, 7, 8, 9, 10}, 10);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, RationalVector(9, Rational(1)), w).reason,
            RejectReason::LengthMismatch);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, w, w).reason, RejectReason::NotBinary);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, labels({3}, 10), w).reason, RejectReason::TrivialVector);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, ones(10), w).reason, RejectReason::TrivialVector);
  auto neg = w;
  neg[1] = -1;
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, u, neg).reason, RejectReason::NegativeEntry);
  auto frac = w;
  frac[1] = make_rational(1, 2);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, u, frac).reason, RejectReason::NotInteger);
  // dropping one multiset entry leaves w.1 = 9
  const auto shorter = labels({1, 5, 5, 6, 6, 7, 7, 8, 9}, 10);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, u, shorter).reason, RejectReason::DivisibilityFails);
  const auto five = labels({1, 5, 6, 7, 8}, 10);
  EXPECT_EQ(verify_nonspreading(s.cc, s.ids, u, five).reason, RejectReason::NotConstantIntersection);
  EXPECT_EQ(verify_nonseparating(s.cc, s.ids, u, u).reason, RejectReason::ProductNotDegree);
}

TEST(Verify, SeparatingAndSynchronisingOnConic)
{
  const auto c = conic_external_action(5);
  const auto cc = CoherentConfiguration::of_group(c.generators);
  const auto ids = rational_central_idempotents(cc);
  const auto clique = indicator(15, c.clique), coclique = indicator(15, c.coclique);
  const auto v = verify_nonseparating(cc, ids, clique, coclique);
  ASSERT_TRUE(v.accepted()) << v.detail;
  EXPECT_EQ(v.witness->certificate.lambda, Rational(1));

  const auto parts = coclique_partition(c.lambda, c.coclique.size());
  ASSERT_TRUE(parts.has_value());
  std::vector<RationalVector> ys;
  for (const auto &p : *parts)
    ys.push_back(indicator(15, p));
  EXPECT_TRUE(verify_nonsynchronising(cc, ids, ys, clique).accepted());
  ys.pop_back();
  EXPECT_EQ(verify_nonsynchronising(cc, ids, ys, clique).reason, RejectReason::NotAPartition);
  EXPECT_EQ(verify_nonsynchronising(cc, ids, {}, clique).reason, RejectReason::NotAPartition);
}

TEST(Search, Bipartitions)
{
  EXPECT_TRUE(detail::bipartitions(1).empty());
  const auto b = detail::bipartitions(3);
  EXPECT_EQ(b.size(), 6u);
  for (const auto &p : b) {
    EXPECT_FALSE(p.t_u.empty());
    EXPECT_FALSE(p.t_w.empty());
    EXPECT_EQ(p.t_u.size() + p.t_w.size(), 3u);
  }
}

TEST(Search, A5PairsWitness)
{
  const auto r = search_nonspreading(induced_pair_action(alternating_group(5)));
  ASSERT_EQ(r.status, SearchStatus::Found);
  // the star of pairs through 1 against a multiset covering every point twice
  EXPECT_EQ(io::vector_to_labels(r.witness->u), (std::vector<long>{1, 2, 3, 4}));
  EXPECT_EQ(io::vector_to_labels(r.witness->others[0]), (std::vector<long>{4, 4, 5, 6, 8}));
  EXPECT_EQ(r.witness->certificate.lambda, Rational(2));
  EXPECT_TRUE(r.witness->certificate.oracle_checked);
  EXPECT_EQ(r.witness->certificate.mode(), "both");
}

TEST(Search, DeterministicAcrossThreadsAndSeeds)
{
  const auto g = two_subsets(6);
  SearchConfig one, many;
  many.threads = 4;
  many.seed = 9;
  const auto a = search_nonspreading(g, one), b = search_nonspreading(g, many);
  ASSERT_EQ(a.status, b.status);
  if (a.witness) {
    EXPECT_EQ(a.witness->u, b.witness->u);
    EXPECT_EQ(a.witness->others, b.witness->others);
  }
}

TEST(Search, TwoTransitiveHasNone)
{
  const auto r = search_nonspreading(symmetric_group(5));
  EXPECT_EQ(r.status, SearchStatus::NotFound);
  EXPECT_TRUE(r.outcomes.empty());
}

TEST(Search, TargetSumAndBudget)
{
  const auto &s = a5_pairs();
  SearchConfig cfg;
  cfg.target_sum = 2;
  EXPECT_EQ(search_nonspreading(s.cc, s.ids, cfg).status, SearchStatus::NotFound);
  cfg.target_sum = 10;
  const auto full = search_nonspreading(s.cc, s.ids, cfg);
  ASSERT_EQ(full.status, SearchStatus::Found);
  EXPECT_EQ(sum(full.witness->others[0]), Rational(10));
}

TEST(Search, BudgetIsReported)
{
  const auto h = hermitian_points(2);
  const auto cc = CoherentConfiguration::of_group(h.generators);
  SearchConfig cfg;
  cfg.budget_nodes = 1;
  EXPECT_EQ(search_nonspreading(cc, rational_central_idempotents(cc), cfg).status, SearchStatus::BudgetExhausted);
}

TEST(Pointwise, RuleOutImpossibleSums)
{
  const auto h = hermitian_points(2);
  const auto cc = CoherentConfiguration::of_group(h.generators);
  const auto ids = rational_central_idempotents(cc);
  const std::size_t big = isotypic_dimensions(ids)[1] == 120 ? 1 : 2;
  // killed by the 120-dimensional component: 9 w_x + N(x) = 3 s / 11, so s = 11 allows no positive weight
  std::size_t leaves = detail::pointwise_leaf_budget;
  const auto eleven = detail::pointwise_values(cc, ids, {big}, 11, 11, false, leaves);
  ASSERT_TRUE(eleven.has_value());
  EXPECT_EQ(std::count(eleven->begin(), eleven->end(), true), 1);
  EXPECT_TRUE(eleven->front());
  // s = 5: a line of the quadrangle, so weights 0 and 1 are both possible
  const auto five = detail::pointwise_values(cc, ids, {3 - big}, 5, 5, false, leaves);
  ASSERT_TRUE(five.has_value());
  EXPECT_TRUE((*five)[0]);
  EXPECT_TRUE((*five)[1]);
  EXPECT_EQ(detail::find_multiset(cc, ids, {big}, 3, {}).status, LpStatus::Infeasible);
  std::size_t none = 0;
  EXPECT_FALSE(detail::pointwise_values(cc, ids, {big}, 11, 11, false, none).has_value());
}

TEST(Search, NonseparatingOnConic)
{
  const auto c = conic_external_action(5);
  const auto cc = CoherentConfiguration::of_group(c.generators);
  const auto r = search_nonseparating(cc, rational_central_idempotents(cc));
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(sum(r.witness->u) * sum(r.witness->others[0]), Rational(15));
  // Petersen: omega * alpha = 2 * 4 < 10 in both rank-three graphs
  EXPECT_EQ(search_nonseparating(a5_pairs().cc, a5_pairs().ids).status, SearchStatus::NotFound);
}

TEST(Probe, A5PairsIsNotCritical)
{
  const auto &s = a5_pairs();
  const auto r = critically_nonspreading_probe(s.cc, s.ids);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.critical, Criticality::False);
  ASSERT_EQ(r.proper_divisors.size(), 3u);
  EXPECT_EQ(r.proper_divisors[2].sum, 5);
  EXPECT_EQ(r.proper_divisors[2].status, LpStatus::Feasible);
}
