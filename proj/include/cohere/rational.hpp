#ifndef COHERE_RATIONAL_HPP
#define COHERE_RATIONAL_HPP

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace cohere {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact rational vector; the row vectors u, v, w of the hierarchy tests.
using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational &q)
{
  return q.get_str();
}

inline Rational parse_rational(std::string_view text)
{
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
    ++i;
  s = s.substr(i);
  if (s.empty())
    throw ParseError("empty rational literal");
  if (s.front() == '+')
    s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

inline Rational dot(const RationalVector &a, const RationalVector &b)
{
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline Rational sum(const RationalVector &a)
{
  Rational s = 0;
  for (const auto &x : a)
    s += x;
  return s;
}

inline RationalVector integer_vector(const std::vector<long> &v)
{
  RationalVector r;
  r.reserve(v.size());
  for (long x : v)
    r.emplace_back(x);
  return r;
}

/// Best rational approximation of x with denominator at most max_den, by
/// continued fractions. Empty when the approximation misses x by more than tol.
inline std::optional<Rational> reconstruct_rational(long double x, std::int64_t max_den = 1000000000000LL,
                                                    long double tol = 1e-9L)
{
  if (!std::isfinite(x))
    return std::nullopt;
  // Convergents h/k built with GMP integers so large partial quotients cannot overflow.
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;
  long double rest = x;
  std::optional<Rational> best;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_ld = std::floor(rest);
    if (std::fabs(a_ld) > 1e18L)
      break;
    Integer a(static_cast<long>(a_ld));
    Integer h_next = a * h_prev + h;
    Integer k_next = a * k_prev + k;
    if (k_next > max_den)
      break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    Rational cand(h_prev, k_prev);
    cand.canonicalize();
    best = cand;
    long double frac = rest - a_ld;
    if (std::fabs(x - static_cast<long double>(cand.get_d())) <= tol * 1e-3L || frac < 1e-18L)
      break;
    rest = 1.0L / frac;
  }
  if (!best)
    return std::nullopt;
  if (std::fabs(x - static_cast<long double>(best->get_d())) > tol)
    return std::nullopt;
  return best;
}

} // namespace cohere

#endif // COHERE_RATIONAL_HPP
