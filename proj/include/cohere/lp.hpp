#ifndef COHERE_LP_HPP
#define COHERE_LP_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace cohere {

/// Feasibility problem in w in Q^n:
///   a . w = 0 for every row a of `equalities`,
///   w >= 0, optionally w <= upper,
///   total_min <= w . 1 <= total_max,
///   optionally w integral.
struct LpProblem
{
  std::size_t variables = 0;
  std::vector<RationalVector> equalities;
  Rational total_min = 0;
  Rational total_max = 0;
  std::optional<Rational> upper;
  bool integral = false;

  static LpProblem with_total(std::size_t n, std::vector<RationalVector> rows, const Rational &s)
  {
    LpProblem p;
    p.variables = n;
    p.equalities = std::move(rows);
    p.total_min = s;
    p.total_max = s;
    return p;
  }
};

struct LpBudget
{
  std::uint64_t max_nodes = 1000000;
  double max_seconds = 60.0;
};

enum class LpStatus
{
  Feasible,
  Infeasible,
  BudgetExhausted
};

struct LpResult
{
  LpStatus status = LpStatus::Infeasible;
  RationalVector solution;
  std::uint64_t nodes = 0;
};

/// Accepts or rejects an integral solution; rejected points are excluded and
/// the search continues.
using SolutionFilter = std::function<bool(const RationalVector &)>;

namespace detail {

/// Dense exact simplex tableau, phase I only, Bland's rule.
class Simplex
{
public:
  /// rows: coefficient rows over `cols` structural columns with right-hand sides.
  /// `slack_basis[r]` names a structural column that is a unit column for row r
  /// usable as initial basis (or -1 for an artificial).
  static std::optional<RationalVector> feasible_point(std::vector<RationalVector> rows, RationalVector rhs,
                                                      std::size_t cols, std::vector<long> slack_basis)
  {
    const std::size_t R = rows.size();
    for (std::size_t r = 0; r < R; ++r)
      if (rhs[r] < 0) {
        for (auto &x : rows[r])
          x = -x;
        rhs[r] = -rhs[r];
        slack_basis[r] = -1;
      }
    std::vector<std::size_t> art_rows;
    for (std::size_t r = 0; r < R; ++r)
      if (slack_basis[r] < 0)
        art_rows.push_back(r);
    const std::size_t C = cols + art_rows.size();
    // tableau rows 0..R-1, objective row R; column C holds rhs
    std::vector<RationalVector> t(R + 1, RationalVector(C + 1, Rational(0)));
    std::vector<std::size_t> basis(R);
    for (std::size_t r = 0; r < R; ++r) {
      for (std::size_t c = 0; c < cols; ++c)
        t[r][c] = rows[r][c];
      t[r][C] = rhs[r];
    }
    for (std::size_t a = 0; a < art_rows.size(); ++a) {
      const std::size_t r = art_rows[a];
      t[r][cols + a] = 1;
      basis[r] = cols + a;
    }
    for (std::size_t r = 0; r < R; ++r)
      if (slack_basis[r] >= 0)
        basis[r] = static_cast<std::size_t>(slack_basis[r]);
    // reduced costs of minimising the sum of artificials
    for (auto r : art_rows) {
      for (std::size_t c = 0; c < cols; ++c)
        t[R][c] -= t[r][c];
      t[R][C] -= t[r][C];
    }
    while (true) {
      std::size_t enter = C;
      for (std::size_t c = 0; c < C; ++c)
        if (t[R][c] < 0) {
          enter = c;
          break;
        }
      if (enter == C)
        break;
      std::size_t leave = R;
      Rational best;
      for (std::size_t r = 0; r < R; ++r) {
        if (t[r][enter] <= 0)
          continue;
        Rational ratio = t[r][C] / t[r][enter];
        if (leave == R || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == R)
        break; // unbounded direction; cannot happen in phase I
      pivot(t, leave, enter);
      basis[leave] = enter;
    }
    if (t[R][C] != 0)
      return std::nullopt;
    RationalVector x(cols, Rational(0));
    for (std::size_t r = 0; r < R; ++r)
      if (basis[r] < cols)
        x[basis[r]] = t[r][C];
    return x;
  }

private:
  static void pivot(std::vector<RationalVector> &t, std::size_t row, std::size_t col)
  {
    const Rational inv = 1 / t[row][col];
    auto &pr = t[row];
    for (auto &x : pr)
      if (x != 0)
        x *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < pr.size(); ++c)
      if (pr[c] != 0)
        nz.push_back(c);
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (r == row || t[r][col] == 0)
        continue;
      const Rational f = t[r][col];
      for (auto c : nz)
        t[r][c] -= f * pr[c];
    }
  }
};

struct Bounds
{
  std::vector<Rational> lo;
  std::vector<std::optional<Rational>> hi;
};

inline Rational floor_of(const Rational &q)
{
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

/// LP relaxation at one branch-and-bound node.
inline std::optional<RationalVector> solve_node(const LpProblem &p, const std::vector<RationalVector> &eq,
                                                const Bounds &b)
{
  const std::size_t n = p.variables;
  std::vector<std::size_t> free_vars;
  Rational lo_sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    lo_sum += b.lo[j];
    if (b.hi[j] && *b.hi[j] < b.lo[j])
      return std::nullopt;
    if (!(b.hi[j] && *b.hi[j] == b.lo[j]))
      free_vars.push_back(j);
  }
  if (lo_sum > p.total_max)
    return std::nullopt;
  const bool ranged = p.total_min != p.total_max;
  std::size_t cols = free_vars.size();
  const std::size_t range_col = cols;
  if (ranged)
    cols += 1;
  std::vector<std::size_t> ub_vars;
  for (std::size_t f = 0; f < free_vars.size(); ++f)
    if (b.hi[free_vars[f]])
      ub_vars.push_back(f);
  const std::size_t first_ub_slack = cols;
  cols += ub_vars.size() + (ranged ? 1 : 0);

  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<long> slack;
  for (const auto &a : eq) {
    RationalVector row(cols, Rational(0));
    Rational r = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j)
      r -= a[j] * b.lo[j];
    for (std::size_t f = 0; f < free_vars.size(); ++f) {
      row[f] = a[free_vars[f]];
      any = any || row[f] != 0;
    }
    if (!any) {
      if (r != 0)
        return std::nullopt;
      continue;
    }
    rows.push_back(std::move(row));
    rhs.push_back(r);
    slack.push_back(-1);
  }
  {
    RationalVector row(cols, Rational(0));
    for (std::size_t f = 0; f < free_vars.size(); ++f)
      row[f] = 1;
    if (ranged)
      row[range_col] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(p.total_min - lo_sum);
    slack.push_back(-1);
  }
  for (std::size_t u = 0; u < ub_vars.size(); ++u) {
    RationalVector row(cols, Rational(0));
    const std::size_t f = ub_vars[u];
    row[f] = 1;
    row[first_ub_slack + u] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(*b.hi[free_vars[f]] - b.lo[free_vars[f]]);
    slack.push_back(static_cast<long>(first_ub_slack + u));
  }
  if (ranged) {
    RationalVector row(cols, Rational(0));
    row[range_col] = 1;
    row[cols - 1] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(p.total_max - p.total_min);
    slack.push_back(static_cast<long>(cols - 1));
  }
  auto x = Simplex::feasible_point(std::move(rows), std::move(rhs), cols, std::move(slack));
  if (!x)
    return std::nullopt;
  RationalVector w = b.lo;
  for (std::size_t f = 0; f < free_vars.size(); ++f)
    w[free_vars[f]] += (*x)[f];
  return w;
}

} // namespace detail

/// Exact LP feasibility with optional integrality by depth-first
/// branch-and-bound: Bland's rule in the simplex, branching on the
/// lowest-index fractional coordinate, floor branch first.
inline LpResult lp_feasible(const LpProblem &p, const LpBudget &budget = {}, const SolutionFilter &accept = {})
{
  const std::size_t n = p.variables;
  for (const auto &row : p.equalities)
    if (row.size() != n)
      throw Error("equality row length differs from variable count");
  if (p.total_min > p.total_max)
    return {LpStatus::Infeasible, {}, 0};

  // independent equality rows
  std::vector<RationalVector> eq;
  if (!p.equalities.empty()) {
    RationalMatrix m(p.equalities.size(), n);
    for (std::size_t r = 0; r < p.equalities.size(); ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = p.equalities[r][c];
    const auto piv = m.row_reduce();
    for (std::size_t r = 0; r < piv.size(); ++r) {
      RationalVector row(n);
      for (std::size_t c = 0; c < n; ++c)
        row[c] = m(r, c);
      eq.push_back(std::move(row));
    }
  }

  const auto start = std::chrono::steady_clock::now();
  LpResult result;
  std::vector<detail::Bounds> stack;
  detail::Bounds root{std::vector<Rational>(n, Rational(0)), std::vector<std::optional<Rational>>(n, p.upper)};
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    if (result.nodes >= budget.max_nodes ||
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.max_seconds) {
      result.status = LpStatus::BudgetExhausted;
      return result;
    }
    detail::Bounds b = std::move(stack.back());
    stack.pop_back();
    ++result.nodes;
    auto w = detail::solve_node(p, eq, b);
    if (!w)
      continue;
    if (!p.integral) {
      if (!accept || accept(*w)) {
        result.status = LpStatus::Feasible;
        result.solution = std::move(*w);
        return result;
      }
      continue;
    }
    std::size_t frac = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integer((*w)[j])) {
        frac = j;
        break;
      }
    if (frac < n) {
      const Rational fl = detail::floor_of((*w)[frac]);
      detail::Bounds up = b, down = std::move(b);
      down.hi[frac] = fl;
      up.lo[frac] = fl + 1;
      stack.push_back(std::move(up)); // popped after the floor branch
      stack.push_back(std::move(down));
      continue;
    }
    if (!accept || accept(*w)) {
      result.status = LpStatus::Feasible;
      result.solution = std::move(*w);
      return result;
    }
    // exclude this integral point: split the first unfixed coordinate three ways
    std::size_t j = n;
    for (std::size_t k = 0; k < n; ++k)
      if (!(b.hi[k] && *b.hi[k] == b.lo[k])) {
        j = k;
        break;
      }
    if (j == n)
      continue;
    const Rational val = (*w)[j];
    detail::Bounds below = b, equal = b, above = std::move(b);
    below.hi[j] = val - 1;
    equal.lo[j] = val;
    equal.hi[j] = val;
    above.lo[j] = val + 1;
    stack.push_back(std::move(above));
    stack.push_back(std::move(equal));
    if (val - 1 >= below.lo[j])
      stack.push_back(std::move(below));
  }
  result.status = LpStatus::Infeasible;
  return result;
}

} // namespace cohere

#endif // COHERE_LP_HPP
