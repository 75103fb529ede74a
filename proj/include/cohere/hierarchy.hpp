#ifndef COHERE_HIERARCHY_HPP
#define COHERE_HIERARCHY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "cc.hpp"
#include "delsarte.hpp"
#include "error.hpp"
#include "io.hpp"
#include "lp.hpp"
#include "matrix.hpp"
#include "perm.hpp"
#include "rational.hpp"

namespace cohere {

enum class Level
{
  NonQI,
  NonSpreading,
  NonSeparating,
  NonSynchronising
};

inline std::string level_name(Level l)
{
  switch (l) {
  case Level::NonQI:
    return "qi";
  case Level::NonSpreading:
    return "spreading";
  case Level::NonSeparating:
    return "separating";
  case Level::NonSynchronising:
    return "synchronising";
  }
  return "?";
}

inline Level parse_level(const std::string &s)
{
  if (s == "qi")
    return Level::NonQI;
  if (s == "spreading")
    return Level::NonSpreading;
  if (s == "separating")
    return Level::NonSeparating;
  if (s == "synchronising" || s == "synchronizing")
    return Level::NonSynchronising;
  throw ParseError("unknown level '" + s + "'");
}

enum class RejectReason
{
  None,
  LengthMismatch,
  NotBinary,
  NotInteger,
  NegativeEntry,
  TrivialVector,
  DivisibilityFails,
  ProductNotDegree,
  NotAPartition,
  NotConstantIntersection
};

inline std::string reason_name(RejectReason r)
{
  switch (r) {
  case RejectReason::None:
    return "None";
  case RejectReason::LengthMismatch:
    return "LengthMismatch";
  case RejectReason::NotBinary:
    return "NotBinary";
  case RejectReason::NotInteger:
    return "NotInteger";
  case RejectReason::NegativeEntry:
    return "NegativeEntry";
  case RejectReason::TrivialVector:
    return "TrivialVector";
  case RejectReason::DivisibilityFails:
    return "DivisibilityFails";
  case RejectReason::ProductNotDegree:
    return "ProductNotDegree";
  case RejectReason::NotAPartition:
    return "NotAPartition";
  case RejectReason::NotConstantIntersection:
    return "NotConstantIntersection";
  }
  return "?";
}

struct Certificate
{
  /// The constant u . w^g.
  Rational lambda;
  /// Which exact identity was checked.
  std::string identity = "vD(u)v^T = (u.1)^2 (v.1)^2 / n^2";
  /// Traces of the idempotents of the split used.
  std::vector<long> traces;
  /// Set when the group-enumeration oracle confirmed lambda.
  bool oracle_checked = false;

  std::string mode() const { return oracle_checked ? "both" : "identity"; }
};

/// For NonSynchronising, `u` is the clique vector v and `others` the parts y_i;
/// otherwise `others` holds the single second vector.
struct Witness
{
  Level level = Level::NonSpreading;
  RationalVector u;
  std::vector<RationalVector> others;
  Certificate certificate;
};

struct Verdict
{
  std::optional<Witness> witness;
  RejectReason reason = RejectReason::None;
  std::string detail;

  bool accepted() const { return witness.has_value(); }
};

/// At least two distinct entries and at most n-2 zero entries.
inline bool is_nontrivial(const RationalVector &v)
{
  if (v.size() < 2)
    return false;
  std::size_t zeros = 0;
  bool distinct = false;
  for (const auto &x : v) {
    zeros += x == 0;
    distinct = distinct || x != v.front();
  }
  return distinct && zeros + 2 <= v.size();
}

inline bool is_binary(const RationalVector &v)
{
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x == 0 || x == 1; });
}

inline std::vector<long> divisors(long n)
{
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

namespace detail {

inline Verdict reject(RejectReason r, std::string detail)
{
  Verdict v;
  v.reason = r;
  v.detail = std::move(detail);
  return v;
}

inline std::optional<Verdict> check_binary(const RationalVector &x, std::size_t n, const char *name)
{
  if (x.size() != n)
    return reject(RejectReason::LengthMismatch, std::string(name) + " has the wrong length");
  if (!is_binary(x))
    return reject(RejectReason::NotBinary, std::string(name) + " is not a {0,1}-vector");
  if (!is_nontrivial(x))
    return reject(RejectReason::TrivialVector, std::string(name) + " is trivial");
  return std::nullopt;
}

inline std::optional<Verdict> check_nonnegative_integer(const RationalVector &x, std::size_t n, const char *name)
{
  if (x.size() != n)
    return reject(RejectReason::LengthMismatch, std::string(name) + " has the wrong length");
  for (const auto &e : x) {
    if (!is_integer(e))
      return reject(RejectReason::NotInteger, std::string(name) + " has a non-integer entry");
    if (e < 0)
      return reject(RejectReason::NegativeEntry, std::string(name) + " has a negative entry");
  }
  if (!is_nontrivial(x))
    return reject(RejectReason::TrivialVector, std::string(name) + " is trivial");
  return std::nullopt;
}

inline std::vector<long> traces_or_empty(const CentralIdempotentSet &ids)
{
  try {
    return isotypic_dimensions(ids);
  } catch (const NonIntegerTrace &) {
    return {};
  }
}

inline Verdict accept_pair(const CoherentConfiguration &cc, const CentralIdempotentSet &ids, Level level,
                           const RationalVector &u, const RationalVector &w)
{
  const auto test = constant_intersection_test(cc, u, w);
  if (!test.constant)
    return reject(RejectReason::NotConstantIntersection,
                  "vD(u)v^T = " + to_string(test.lhs) + " but the constant case needs " + to_string(test.rhs));
  Verdict v;
  v.witness = Witness{level, u, {w}, {}};
  v.witness->certificate.lambda = *test.value;
  v.witness->certificate.traces = traces_or_empty(ids);
  return v;
}

} // namespace detail

/// u binary, w a nonnegative integer vector, (w.1) | n, constant intersection.
inline Verdict verify_nonspreading(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                   const RationalVector &u, const RationalVector &w)
{
  const std::size_t n = cc.n();
  if (auto r = detail::check_binary(u, n, "u"))
    return *r;
  if (auto r = detail::check_nonnegative_integer(w, n, "w"))
    return *r;
  const Rational s = sum(w);
  if (s == 0 || Integer(static_cast<long>(n)) % s.get_num() != 0)
    return detail::reject(RejectReason::DivisibilityFails, "w.1 = " + to_string(s) + " does not divide " +
                                                               std::to_string(n));
  return detail::accept_pair(cc, ids, Level::NonSpreading, u, w);
}

/// w, x nonnegative integer vectors with constant intersection.
inline Verdict verify_nonqi(const CoherentConfiguration &cc, const CentralIdempotentSet &ids, const RationalVector &w,
                            const RationalVector &x)
{
  const std::size_t n = cc.n();
  if (auto r = detail::check_nonnegative_integer(w, n, "w"))
    return *r;
  if (auto r = detail::check_nonnegative_integer(x, n, "x"))
    return *r;
  return detail::accept_pair(cc, ids, Level::NonQI, w, x);
}

/// u, v binary with (u.1)(v.1) = n and constant intersection (then lambda = 1).
inline Verdict verify_nonseparating(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                    const RationalVector &u, const RationalVector &v)
{
  const std::size_t n = cc.n();
  if (auto r = detail::check_binary(u, n, "u"))
    return *r;
  if (auto r = detail::check_binary(v, n, "v"))
    return *r;
  if (sum(u) * sum(v) != Rational(static_cast<long>(n)))
    return detail::reject(RejectReason::ProductNotDegree, "(u.1)(v.1) = " + to_string(sum(u) * sum(v)) +
                                                              " differs from " + std::to_string(n));
  return detail::accept_pair(cc, ids, Level::NonSeparating, u, v);
}

/// Parts y_i summing to 1, v binary, each (y_i.1)(v.1) = n and each (y_i, v)
/// with constant intersection.
inline Verdict verify_nonsynchronising(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                       const std::vector<RationalVector> &ys, const RationalVector &v)
{
  const std::size_t n = cc.n();
  if (auto r = detail::check_binary(v, n, "v"))
    return *r;
  if (ys.empty())
    return detail::reject(RejectReason::NotAPartition, "no parts given");
  RationalVector total(n, Rational(0));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i].size() != n)
      return detail::reject(RejectReason::LengthMismatch, "part " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t x = 0; x < n; ++x)
      total[x] += ys[i][x];
  }
  for (const auto &y : ys) {
    if (!is_binary(y))
      return detail::reject(RejectReason::NotBinary, "a part is not a {0,1}-vector");
    if (!is_nontrivial(y))
      return detail::reject(RejectReason::TrivialVector, "a part is trivial");
  }
  if (total != ones(n))
    return detail::reject(RejectReason::NotAPartition, "the parts do not sum to the all-ones vector");
  const Rational nn(static_cast<long>(n));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (sum(ys[i]) * sum(v) != nn)
      return detail::reject(RejectReason::ProductNotDegree, "part " + std::to_string(i + 1) + " has the wrong size");
    const auto test = constant_intersection_test(cc, ys[i], v);
    if (!test.constant)
      return detail::reject(RejectReason::NotConstantIntersection,
                            "part " + std::to_string(i + 1) + " fails the constant intersection identity");
  }
  Verdict out;
  out.witness = Witness{Level::NonSynchronising, v, ys, {}};
  out.witness->certificate.lambda = 1;
  out.witness->certificate.traces = detail::traces_or_empty(ids);
  return out;
}

/// w' = (n / (w.1)) w.
inline RationalVector normalize_witness(const RationalVector &w, std::size_t n)
{
  const Rational s = sum(w);
  if (s <= 0 || !is_integer(s) || Integer(static_cast<long>(n)) % s.get_num() != 0)
    throw DivisibilityFails("w.1 = " + to_string(s) + " does not divide " + std::to_string(n));
  const Rational f = Rational(static_cast<long>(n)) / s;
  RationalVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = w[i] * f;
  return out;
}

/// Confirms lambda by enumerating the group. Returns nullopt when |G| exceeds cap.
inline std::optional<bool> oracle_confirms(const GeneratorSet &g, const Witness &w, std::size_t cap)
{
  try {
    for (const auto &other : w.others) {
      const auto values = orbit_inner_products(g, w.u, other, cap);
      if (values.size() != 1 || values.front().first != w.certificate.lambda)
        return false;
    }
    return true;
  } catch (const CapExceeded &) {
    return std::nullopt;
  }
}

struct SearchConfig
{
  std::uint64_t budget_nodes = 1000000;
  double budget_secs = 60.0;
  std::uint64_t seed = 0;
  /// Restrict w.1 to this value; otherwise divisors of n are tried ascending.
  std::optional<long> target_sum;
  std::size_t enum_cap = default_enum_cap;
  unsigned threads = 1;
};

enum class SearchStatus
{
  Found,
  NotFound,
  BudgetExhausted
};

inline std::string status_name(SearchStatus s)
{
  switch (s) {
  case SearchStatus::Found:
    return "Found";
  case SearchStatus::NotFound:
    return "NotFound";
  case SearchStatus::BudgetExhausted:
    return "BudgetExhausted";
  }
  return "?";
}

/// One split of the nonprincipal rational components: u is killed by T_w and
/// w by T_u.
struct Bipartition
{
  std::vector<std::size_t> t_u, t_w;
};

struct BipartitionOutcome
{
  Bipartition part;
  LpStatus u_status = LpStatus::Infeasible;
  LpStatus w_status = LpStatus::Infeasible;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

struct SearchResult
{
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Witness> witness;
  std::vector<BipartitionOutcome> outcomes;
  std::vector<long> traces;
};

namespace detail {

inline std::vector<Bipartition> bipartitions(std::size_t components)
{
  std::vector<Bipartition> out;
  if (components < 2 || components > 20)
    return out;
  const std::uint64_t full = (std::uint64_t{1} << components) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Bipartition b;
    for (std::size_t t = 0; t < components; ++t)
      ((mask >> t) & 1 ? b.t_u : b.t_w).push_back(t + 1);
    out.push_back(std::move(b));
  }
  return out;
}

/// Rows a with a . x = 0 iff x Pi_T = 0, for Pi_T the sum of the given idempotents.
inline std::vector<RationalVector> kernel_rows(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                               const std::vector<std::size_t> &which)
{
  const auto pi = expand(cc, idempotent_sum(ids, which));
  const std::size_t n = cc.n();
  std::vector<RationalVector> rows(n, RationalVector(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      rows[y][x] = pi(x, y);
  return rows;
}

inline constexpr std::size_t pointwise_leaf_budget = 4000000;

/// Weights a single point can carry in a nonnegative integer w with w.1 = s
/// and w Pi_t = 0 for each t in T.
///
/// Column y of Pi_t is sum_i c_i N_i(y), where N_i(y) is the weight of w on
/// the points x with (x,y) in R_i and N_0(y) = w_y. The coefficients do not
/// depend on y, so one small integer system in the N_i covers every point.
/// Returns nullopt when an idempotent is inexact, a coefficient overflows, or
/// the enumeration exhausts budget (decremented per leaf).
inline std::optional<std::vector<bool>> pointwise_values(const CoherentConfiguration &cc,
                                                         const CentralIdempotentSet &ids,
                                                         const std::vector<std::size_t> &killers, long s,
                                                         long upper, bool binary, std::size_t &budget)
{
  const std::size_t d = cc.rank();
  std::vector<std::vector<long long>> eqs;
  for (auto t : killers) {
    if (!ids.items.at(t).exact)
      return std::nullopt;
    const auto &c = *ids.items[t].exact;
    mpz_class l = 1;
    for (const auto &x : c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<long long> row(d);
    for (std::size_t i = 0; i < d; ++i) {
      const mpz_class v = c[i].get_num() * (l / c[i].get_den());
      if (!v.fits_slong_p() || abs(v) > mpz_class(1L << 30))
        return std::nullopt;
      row[i] = v.get_si();
    }
    eqs.push_back(std::move(row));
  }
  const auto k = cc.valencies();
  std::vector<bool> out(static_cast<std::size_t>(std::min(upper, s)) + 1, false);
  std::vector<long> nvals(d, 0);
  bool overflow = false;

  auto satisfied = [&] {
    for (const auto &row : eqs) {
      long long acc = 0;
      for (std::size_t i = 0; i < d; ++i)
        acc += row[i] * nvals[i];
      if (acc != 0)
        return false;
    }
    return true;
  };
  // N_1 .. N_{d-2} enumerated, N_{d-1} takes the remainder
  auto rec = [&](auto &&self, std::size_t i, long rem) -> bool {
    if (overflow)
      return false;
    if (i + 1 == d) {
      if (budget == 0) {
        overflow = true;
        return false;
      }
      --budget;
      if (binary && rem > k[i])
        return false;
      nvals[i] = rem;
      return satisfied();
    }
    const long top = binary ? std::min<long>(rem, k[i]) : rem;
    for (long v = 0; v <= top; ++v) {
      nvals[i] = v;
      if (self(self, i + 1, rem - v))
        return true;
    }
    return false;
  };
  for (long a = 0; a < static_cast<long>(out.size()); ++a) {
    nvals[0] = a;
    out[a] = d == 1 ? (a == s && satisfied()) : rec(rec, 1, s - a);
    if (overflow)
      return std::nullopt;
  }
  return out;
}

/// Binary x with x Pi_T = 0 and lo <= x.1 <= hi (default: every nontrivial size).
inline LpResult find_binary(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                            const std::vector<std::size_t> &killers, const LpBudget &budget, long lo = 2,
                            long hi = -1)
{
  LpProblem p;
  p.variables = cc.n();
  p.equalities = kernel_rows(cc, ids, killers);
  p.total_min = lo;
  p.total_max = hi < 0 ? static_cast<long>(cc.n()) - 1 : hi;
  // a proper binary vector needs points of weight 0 and of weight 1
  long first = -1, last = -1;
  bool known = true;
  std::size_t leaves = pointwise_leaf_budget;
  for (long a = lo; a <= static_cast<long>(p.total_max.get_d()) && known; ++a) {
    const auto vals = pointwise_values(cc, ids, killers, a, 1, true, leaves);
    if (!vals)
      known = false;
    else if (vals->size() == 2 && (*vals)[0] && (*vals)[1]) {
      first = first < 0 ? a : first;
      last = a;
    }
  }
  if (known) {
    if (first < 0)
      return {};
    p.total_min = first;
    p.total_max = last;
  }
  p.upper = Rational(1);
  p.integral = true;
  return lp_feasible(p, budget);
}

inline LpResult find_multiset(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                              const std::vector<std::size_t> &killers, long s, const LpBudget &budget)
{
  LpProblem p = LpProblem::with_total(cc.n(), kernel_rows(cc, ids, killers), Rational(s));
  p.integral = true;
  std::size_t leaves = pointwise_leaf_budget;
  if (const auto vals = pointwise_values(cc, ids, killers, s, s, false, leaves)) {
    // nontrivial needs two distinct weights, one of them positive
    const auto distinct = std::count(vals->begin(), vals->end(), true);
    long top = static_cast<long>(vals->size()) - 1;
    while (top > 0 && !(*vals)[top])
      --top;
    if (distinct < 2 || top == 0)
      return {};
    p.upper = Rational(top);
  }
  return lp_feasible(p, budget, [](const RationalVector &w) { return is_nontrivial(w); });
}

inline std::vector<long> witness_key(const Witness &w)
{
  auto key = io::vector_to_labels(w.u);
  key.push_back(0);
  for (const auto &o : w.others) {
    auto k = io::vector_to_labels(o);
    key.insert(key.end(), k.begin(), k.end());
  }
  return key;
}

inline std::vector<long> sums_to_try(std::size_t n, const std::optional<long> &target)
{
  if (target)
    return {*target};
  std::vector<long> out;
  for (auto d : divisors(static_cast<long>(n)))
    if (d > 1)
      out.push_back(d);
  return out;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F &&body)
{
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        body(i);
    });
  for (auto &th : pool)
    th.join();
}

} // namespace detail

/// Searches for a nonspreading witness through design-orthogonal pairs.
/// Every bipartition is explored; the verified witness with the
/// lexicographically least label list of u is reported.
inline SearchResult search_nonspreading(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                        const SearchConfig &cfg = {})
{
  if (!ids.exact)
    throw Error("search needs an exact idempotent split");
  SearchResult result;
  result.traces = detail::traces_or_empty(ids);
  const auto parts = detail::bipartitions(ids.size() - 1);
  result.outcomes.resize(parts.size());
  const auto sums = detail::sums_to_try(cc.n(), cfg.target_sum);
  detail::parallel_for(parts.size(), cfg.threads, [&](std::size_t i) {
    auto &out = result.outcomes[i];
    out.part = parts[i];
    const auto start = std::chrono::steady_clock::now();
    auto remaining = [&] {
      return cfg.budget_secs - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    const auto ur = detail::find_binary(cc, ids, out.part.t_w, {cfg.budget_nodes, remaining()});
    out.u_status = ur.status;
    out.nodes += ur.nodes;
    if (ur.status != LpStatus::Feasible)
      return;
    out.w_status = LpStatus::Infeasible;
    for (long s : sums) {
      const auto wr = detail::find_multiset(cc, ids, out.part.t_u, s, {cfg.budget_nodes, remaining()});
      out.nodes += wr.nodes;
      if (wr.status == LpStatus::BudgetExhausted) {
        out.w_status = LpStatus::BudgetExhausted;
        continue;
      }
      if (wr.status == LpStatus::Infeasible)
        continue;
      auto v = verify_nonspreading(cc, ids, ur.solution, wr.solution);
      if (v.accepted()) {
        out.w_status = LpStatus::Feasible;
        out.witness = std::move(v.witness);
        return;
      }
    }
  });
  bool exhausted = false;
  for (auto &o : result.outcomes) {
    exhausted = exhausted || o.u_status == LpStatus::BudgetExhausted || o.w_status == LpStatus::BudgetExhausted;
    if (o.witness && (!result.witness || detail::witness_key(*o.witness) < detail::witness_key(*result.witness)))
      result.witness = o.witness;
  }
  result.status = result.witness ? SearchStatus::Found
                                 : (exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound);
  return result;
}

inline SearchResult search_nonspreading(const GeneratorSet &g, const SearchConfig &cfg = {})
{
  const auto cc = CoherentConfiguration::of_group(g);
  IdempotentOptions opt;
  opt.seed = cfg.seed;
  const auto ids = rational_central_idempotents(cc, opt);
  auto r = search_nonspreading(cc, ids, cfg);
  if (r.witness)
    r.witness->certificate.oracle_checked = oracle_confirms(g, *r.witness, cfg.enum_cap).value_or(false);
  return r;
}

/// Searches for binary u, v with (u.1)(v.1) = n and constant intersection,
/// through design-orthogonal pairs as for the nonspreading search.
inline SearchResult search_nonseparating(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                         const SearchConfig &cfg = {})
{
  if (!ids.exact)
    throw Error("search needs an exact idempotent split");
  SearchResult result;
  result.traces = detail::traces_or_empty(ids);
  const auto parts = detail::bipartitions(ids.size() - 1);
  result.outcomes.resize(parts.size());
  const long n = static_cast<long>(cc.n());
  detail::parallel_for(parts.size(), cfg.threads, [&](std::size_t i) {
    auto &out = result.outcomes[i];
    out.part = parts[i];
    const auto start = std::chrono::steady_clock::now();
    auto remaining = [&] {
      return cfg.budget_secs - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    for (long a : divisors(n)) {
      if (a < 2 || a > n / 2)
        continue;
      const auto ur = detail::find_binary(cc, ids, out.part.t_w, {cfg.budget_nodes, remaining()}, a, a);
      out.nodes += ur.nodes;
      if (ur.status == LpStatus::BudgetExhausted)
        out.u_status = LpStatus::BudgetExhausted;
      if (ur.status != LpStatus::Feasible)
        continue;
      if (out.u_status != LpStatus::BudgetExhausted)
        out.u_status = LpStatus::Feasible;
      const auto vr = detail::find_binary(cc, ids, out.part.t_u, {cfg.budget_nodes, remaining()}, n / a, n / a);
      out.nodes += vr.nodes;
      if (vr.status == LpStatus::BudgetExhausted)
        out.w_status = LpStatus::BudgetExhausted;
      if (vr.status != LpStatus::Feasible)
        continue;
      auto v = verify_nonseparating(cc, ids, ur.solution, vr.solution);
      if (v.accepted()) {
        out.w_status = LpStatus::Feasible;
        out.witness = std::move(v.witness);
        return;
      }
    }
  });
  bool exhausted = false;
  for (auto &o : result.outcomes) {
    exhausted = exhausted || o.u_status == LpStatus::BudgetExhausted || o.w_status == LpStatus::BudgetExhausted;
    if (o.witness && (!result.witness || detail::witness_key(*o.witness) < detail::witness_key(*result.witness)))
      result.witness = o.witness;
  }
  result.status = result.witness ? SearchStatus::Found
                                 : (exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound);
  return result;
}

enum class Criticality
{
  False,
  True,
  Unknown
};

inline std::string criticality_name(Criticality c)
{
  return c == Criticality::True ? "true" : c == Criticality::False ? "false" : "unknown";
}

struct ProbeEntry
{
  long sum = 0;
  /// Feasible: some multiset w with this sum exists in a bipartition that also
  /// admits a binary u.
  LpStatus status = LpStatus::Infeasible;
  std::optional<Witness> witness;
};

struct ProbeResult
{
  Criticality critical = Criticality::Unknown;
  /// The design-orthogonal search captures every witness (stratifiable case).
  bool complete = false;
  std::vector<ProbeEntry> proper_divisors;
  std::optional<Witness> full_sum_witness;
  bool full_sum_exhausted = false;
};

/// For each proper divisor s of n, looks for a witness with w.1 = s. Critical
/// is decided only when the search is complete for the configuration and no
/// budget ran out.
inline ProbeResult critically_nonspreading_probe(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                                 const SearchConfig &cfg = {})
{
  ProbeResult out;
  out.complete = ids.factorisation_complete && is_stratifiable(cc);
  const auto parts = detail::bipartitions(ids.size() - 1);
  const long n = static_cast<long>(cc.n());
  bool exhausted = false;
  // u existence per bipartition, computed lazily
  std::vector<std::optional<LpResult>> u_cache(parts.size());
  for (long s : divisors(n)) {
    if (s == n)
      continue;
    ProbeEntry entry;
    entry.sum = s;
    if (s > 1) {
      for (std::size_t i = 0; i < parts.size() && !entry.witness; ++i) {
        const auto wr = detail::find_multiset(cc, ids, parts[i].t_u, s, {cfg.budget_nodes, cfg.budget_secs});
        if (wr.status == LpStatus::BudgetExhausted) {
          entry.status = LpStatus::BudgetExhausted;
          continue;
        }
        if (wr.status == LpStatus::Infeasible)
          continue;
        if (!u_cache[i])
          u_cache[i] = detail::find_binary(cc, ids, parts[i].t_w, {cfg.budget_nodes, cfg.budget_secs});
        if (u_cache[i]->status == LpStatus::BudgetExhausted) {
          entry.status = LpStatus::BudgetExhausted;
          continue;
        }
        if (u_cache[i]->status == LpStatus::Infeasible)
          continue;
        auto v = verify_nonspreading(cc, ids, u_cache[i]->solution, wr.solution);
        if (v.accepted()) {
          entry.status = LpStatus::Feasible;
          entry.witness = std::move(v.witness);
        }
      }
    }
    exhausted = exhausted || entry.status == LpStatus::BudgetExhausted;
    out.proper_divisors.push_back(std::move(entry));
  }
  SearchConfig full = cfg;
  full.target_sum = n;
  const auto r = search_nonspreading(cc, ids, full);
  out.full_sum_witness = r.witness;
  out.full_sum_exhausted = r.status == SearchStatus::BudgetExhausted;

  const bool smaller = std::any_of(out.proper_divisors.begin(), out.proper_divisors.end(),
                                   [](const ProbeEntry &e) { return e.witness.has_value(); });
  if (smaller)
    out.critical = Criticality::False;
  else if (out.complete && !exhausted && out.full_sum_witness)
    out.critical = Criticality::True;
  else
    out.critical = Criticality::Unknown;
  return out;
}

} // namespace cohere

#endif // COHERE_HIERARCHY_HPP
