#ifndef COHERE_POLY_HPP
#define COHERE_POLY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Eigenvalues>

#include "error.hpp"
#include "rational.hpp"

namespace cohere::poly {

/// Coefficients low to high degree; the zero polynomial is empty.
using Poly = std::vector<Rational>;
using Complex = std::complex<long double>;

inline void trim(Poly &p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline long degree(const Poly &p) { return static_cast<long>(p.size()) - 1; }

inline Poly mul(const Poly &a, const Poly &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline Poly sub(Poly a, const Poly &b)
{
  if (a.size() < b.size())
    a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

/// a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly &b)
{
  if (b.empty())
    throw Error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size())
    return {{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (long k = degree(a) - degree(b); k >= 0; --k) {
    const Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const Poly &a, const Poly &b) { return divmod(a, b).second; }

inline Poly derivative(const Poly &p)
{
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

inline Poly monic(Poly p)
{
  trim(p);
  if (p.empty())
    return p;
  const Rational lead = p.back();
  for (auto &c : p)
    c /= lead;
  return p;
}

/// Returns (g, s) with g = gcd(a, b) monic and s*a = g (mod b).
inline std::pair<Poly, Poly> gcd_with_cofactor(Poly a, Poly b)
{
  Poly s0{Rational(1)}, s1{};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly s2 = sub(s0, mul(q, s1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (a.empty())
    return {a, s0};
  const Rational lead = a.back();
  for (auto &c : a)
    c /= lead;
  for (auto &c : s0)
    c /= lead;
  return {a, s0};
}

inline Rational eval(const Poly &p, const Rational &x)
{
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

inline Complex eval(const Poly &p, const Complex &x)
{
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + Complex(static_cast<long double>(it->get_d()), 0);
  return acc;
}

/// Complex roots of a polynomial with simple roots: companion-matrix
/// eigenvalues followed by Newton polishing in long double.
inline std::vector<Complex> numeric_roots(const Poly &p_in)
{
  Poly p = monic(p_in);
  const long deg = degree(p);
  if (deg < 1)
    return {};
  if (deg == 1)
    return {Complex(static_cast<long double>(Rational(-p[0]).get_d()), 0)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (long i = 1; i < deg; ++i)
    companion(i, i - 1) = 1.0;
  for (long i = 0; i < deg; ++i)
    companion(i, deg - 1) = -p[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Poly dp = derivative(p);
  std::vector<Complex> roots;
  for (long i = 0; i < deg; ++i) {
    Complex r(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 50; ++it) {
      const Complex f = eval(p, r), fp = eval(dp, r);
      if (std::abs(fp) == 0)
        break;
      const Complex step = f / fp;
      r -= step;
      if (std::abs(step) <= 1e-17L * std::max<long double>(1, std::abs(r)))
        break;
    }
    if (std::fabs(r.imag()) < 1e-12L * std::max<long double>(1, std::abs(r)))
      r = Complex(r.real(), 0);
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex &a, const Complex &b) {
    if (a.real() != b.real())
      return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

/// One irreducible (or, if `complete` is false, possibly reducible) factor
/// over Q together with its numeric roots.
struct Factor
{
  Poly poly; // monic
  std::vector<Complex> roots;
};

struct Factorisation
{
  std::vector<Factor> factors;
  bool complete = true;
};

namespace detail {

inline bool near_integer_poly(const std::vector<Complex> &coeffs, Poly &out)
{
  out.clear();
  for (const auto &c : coeffs) {
    const long double scale = std::max<long double>(1, std::fabs(c.real()));
    if (std::fabs(c.imag()) > 1e-6L * scale)
      return false;
    const long double r = std::round(c.real());
    if (std::fabs(c.real() - r) > 1e-6L * scale || std::fabs(r) > 9e17L)
      return false;
    out.emplace_back(static_cast<long>(r));
  }
  return true;
}

inline std::vector<Complex> product_from_roots(const std::vector<Complex> &roots)
{
  std::vector<Complex> c{Complex(1, 0)};
  for (const auto &r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0, 0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

} // namespace detail

/// Factors a monic squarefree integer polynomial over Q. Integer roots are
/// found exactly; the remaining factors by recombining numeric roots into
/// candidate integer polynomials, smallest degree first, each accepted only
/// after an exact division. More than `combination_budget` candidate subsets
/// stops the search and leaves the rest as one factor (complete = false).
inline Factorisation factor_over_q(const Poly &p_in, std::uint64_t combination_budget = 2000000)
{
  Poly rest = monic(p_in);
  for (const auto &c : rest)
    if (!is_integer(c))
      throw Error("factor_over_q expects a monic integer polynomial");
  Factorisation out;
  std::vector<Complex> roots = numeric_roots(rest);

  // integer roots
  for (std::size_t i = 0; i < roots.size();) {
    const auto &r = roots[i];
    const long double re = std::round(r.real());
    if (std::fabs(r.imag()) < 1e-6L && std::fabs(r.real() - re) < 1e-6L * std::max<long double>(1, std::fabs(re)) &&
        std::fabs(re) < 9e17L) {
      const Rational k(static_cast<long>(re));
      if (eval(rest, k) == 0) {
        Poly lin{-k, Rational(1)};
        rest = divmod(rest, lin).first;
        out.factors.push_back({lin, {Complex(re, 0)}});
        roots.erase(roots.begin() + static_cast<long>(i));
        continue;
      }
    }
    ++i;
  }

  std::uint64_t spent = 0;
  while (degree(rest) > 0) {
    const std::size_t m = roots.size();
    bool found = false;
    for (std::size_t size = 2; size <= m / 2 && !found; ++size) {
      // lexicographic enumeration of index subsets of the given size
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i)
        idx[i] = i;
      while (true) {
        if (++spent > combination_budget) {
          out.complete = false;
          out.factors.push_back({rest, roots});
          return out;
        }
        std::vector<Complex> subset;
        long double imag_sum = 0;
        for (auto i : idx) {
          subset.push_back(roots[i]);
          imag_sum += roots[i].imag();
        }
        Poly cand;
        if (std::fabs(imag_sum) < 1e-6L && detail::near_integer_poly(detail::product_from_roots(subset), cand)) {
          auto [q, r] = divmod(rest, cand);
          if (r.empty()) {
            out.factors.push_back({cand, subset});
            rest = q;
            for (auto it = idx.rbegin(); it != idx.rend(); ++it)
              roots.erase(roots.begin() + static_cast<long>(*it));
            found = true;
            break;
          }
        }
        // next combination
        long pos = static_cast<long>(size) - 1;
        while (pos >= 0 && idx[pos] == m - size + static_cast<std::size_t>(pos))
          --pos;
        if (pos < 0)
          break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < size; ++j)
          idx[j] = idx[j - 1] + 1;
      }
    }
    if (!found) {
      out.factors.push_back({rest, roots});
      break;
    }
  }
  return out;
}

} // namespace cohere::poly

#endif // COHERE_POLY_HPP
