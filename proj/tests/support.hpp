#ifndef COHERE_TESTS_SUPPORT_HPP
#define COHERE_TESTS_SUPPORT_HPP

#include <cohere/algebra.hpp>
#include <cohere/constructions.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cohere::testing {

inline RationalVector random_integer_vector(std::mt19937_64 &rng, std::size_t n, long lo, long hi)
{
  std::uniform_int_distribution<long> d(lo, hi);
  RationalVector v(n);
  for (auto &x : v)
    x = d(rng);
  return v;
}

/// Small transitive groups with |G| <= 10^4 and degree <= 30.
inline std::vector<std::pair<std::string, GeneratorSet>> small_transitive_groups()
{
  return {
      {"AGL(1,5) on pairs", induced_pair_action(agl1(5))},
      {"A5 on pairs", induced_pair_action(alternating_group(5))},
      {"S5 natural", symmetric_group(5)},
      {"C5 regular", cyclic_regular(5)},
      {"SL(2,5) on 24 vectors", sl25_on_vectors()},
      {"AGL(1,7)", agl1(7)},
      {"S6 on pairs", two_subsets(6)},
      {"PGL(2,5) on conic externals", conic_external_action(5).generators},
  };
}

/// x times (Pi_0 + sum of the chosen Pi_t), scaled to a primitive integer vector.
/// Such vectors lie in the chosen isotypic components only.
inline RationalVector project(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                              std::vector<std::size_t> keep, const RationalVector &x)
{
  keep.push_back(0);
  const auto m = expand(cc, idempotent_sum(ids, keep));
  RationalVector out(cc.n(), Rational(0));
  for (std::size_t a = 0; a < cc.n(); ++a)
    if (x[a] != 0)
      for (std::size_t b = 0; b < cc.n(); ++b)
        out[b] += x[a] * m(a, b);
  return primitive_integer(out);
}

inline bool commutative_group(const std::string &name)
{
  return name != "AGL(1,5) on pairs" && name != "SL(2,5) on 24 vectors";
}

} // namespace cohere::testing

#endif // COHERE_TESTS_SUPPORT_HPP
