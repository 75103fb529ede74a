#ifndef COHERE_ALGEBRA_HPP
#define COHERE_ALGEBRA_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cc.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

// The adjacency algebra is handled in coefficient space: an element
// sum_i c_i A_i is the vector c of length d+1, and products go through the
// intersection numbers. Matrix entries of sum_i c_i A_i at (x,y) are
// c_{rel(x,y)}, so the max-entry norm of a matrix is the max |c_i|.

namespace cohere {

using Complex = std::complex<double>;

template <class T>
std::vector<T> algebra_multiply(const CoherentConfiguration &cc, const std::vector<T> &a, const std::vector<T> &b)
{
  std::vector<T> out(cc.rank(), T(0));
  for (const auto &pr : cc.products()) {
    if (a[pr.i] == T(0) || b[pr.j] == T(0))
      continue;
    out[pr.k] += a[pr.i] * b[pr.j] * T(static_cast<double>(pr.p));
  }
  return out;
}

template <>
inline std::vector<Rational> algebra_multiply(const CoherentConfiguration &cc, const std::vector<Rational> &a,
                                              const std::vector<Rational> &b)
{
  std::vector<Rational> out(cc.rank(), Rational(0));
  for (const auto &pr : cc.products()) {
    if (a[pr.i] == 0 || b[pr.j] == 0)
      continue;
    out[pr.k] += a[pr.i] * b[pr.j] * Rational(static_cast<long>(pr.p));
  }
  return out;
}

/// Coefficients of the adjoint (conjugate transpose): c*_i = conj(c_{i*}).
inline std::vector<Complex> adjoint(const CoherentConfiguration &cc, const std::vector<Complex> &c)
{
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = std::conj(c[cc.converse()[i]]);
  return out;
}

inline RationalVector adjoint(const CoherentConfiguration &cc, const RationalVector &c)
{
  RationalVector out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = c[cc.converse()[i]];
  return out;
}

/// Basis of the center Z(A), each vector a primitive integer combination of the A_i.
struct CenterBasis
{
  std::vector<RationalVector> basis;
  std::size_t dimension() const { return basis.size(); }
};

inline RationalVector primitive_integer(RationalVector v)
{
  Integer den = 1, num = 0;
  for (const auto &x : v) {
    if (x == 0)
      continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  for (auto &x : v)
    x *= den;
  for (const auto &x : v)
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  if (num != 0)
    for (auto &x : v)
      x /= num;
  return v;
}

/// Solves sum_i c_i (p_ij^k - p_ji^k) = 0 for all j, k, i.e. [sum c_i A_i, A_j] = 0.
inline CenterBasis center_basis(const CoherentConfiguration &cc)
{
  const std::size_t D = cc.rank();
  RationalMatrix m(D * D, D);
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t k = 0; k < D; ++k)
      for (std::size_t i = 0; i < D; ++i)
        m(j * D + k, i) = Rational(static_cast<long>(cc.p(i, j, k) - cc.p(j, i, k)));
  CenterBasis out;
  for (auto &v : m.nullspace())
    out.basis.push_back(primitive_integer(std::move(v)));
  return out;
}

inline bool is_central(const CoherentConfiguration &cc, const RationalVector &c)
{
  for (std::size_t j = 0; j < cc.rank(); ++j) {
    RationalVector a(cc.rank(), Rational(0));
    a[j] = 1;
    if (algebra_multiply(cc, c, a) != algebra_multiply(cc, a, c))
      return false;
  }
  return true;
}

/// Minimal polynomial of an algebra element, found as the first linear
/// dependency among its powers. Monic; integer when the element is integral.
inline poly::Poly minimal_polynomial(const CoherentConfiguration &cc, const RationalVector &z)
{
  const std::size_t D = cc.rank();
  std::vector<RationalVector> powers;
  RationalVector cur(D, Rational(0));
  cur[0] = 1;
  for (std::size_t deg = 0; deg <= D; ++deg) {
    powers.push_back(cur);
    RationalMatrix m(D, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < D; ++r)
        m(r, c) = powers[c][r];
    auto null = m.nullspace();
    if (!null.empty()) {
      // nullspace vectors put 1 at the free (last) column
      poly::Poly p = null.front();
      return poly::monic(p);
    }
    cur = algebra_multiply(cc, cur, z);
  }
  throw Error("minimal polynomial degree exceeds algebra dimension");
}

/// Evaluates a polynomial at an algebra element (Horner), exactly.
inline RationalVector evaluate(const CoherentConfiguration &cc, const poly::Poly &p, const RationalVector &z)
{
  RationalVector acc(cc.rank(), Rational(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = algebra_multiply(cc, acc, z);
    acc[0] += *it;
  }
  return acc;
}

struct CentralIdempotent
{
  /// Coefficients over the A_i. Always filled.
  std::vector<Complex> numeric;
  /// Filled when every coefficient is an exactly verified rational.
  std::optional<RationalVector> exact;
  /// Degree of the minimal-polynomial factor this idempotent came from.
  std::size_t factor_degree = 1;
};

struct CentralIdempotentSet
{
  std::size_t n = 0;
  /// items[0] is the principal idempotent J/n.
  std::vector<CentralIdempotent> items;
  /// All items exact and the idempotent identities verified exactly.
  bool exact = false;
  /// True for the coarser split over Q (Galois-orbit sums).
  bool rational_split = false;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  RationalVector separating_element;
  poly::Poly minimal_polynomial;
  bool factorisation_complete = true;

  std::size_t size() const { return items.size(); }
};

struct IdempotentOptions
{
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 20;
};

namespace detail {

inline std::vector<Complex> to_numeric(const RationalVector &v)
{
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.emplace_back(x.get_d(), 0.0);
  return out;
}

inline double max_abs(const std::vector<Complex> &v)
{
  double m = 0;
  for (const auto &x : v)
    m = std::max(m, std::abs(x));
  return m;
}

inline std::vector<Complex> numeric_sub(std::vector<Complex> a, const std::vector<Complex> &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

/// Exact idempotent of Q[z]/(m) attached to the factor f: e = 1 mod f, 0 mod m/f.
inline poly::Poly factor_idempotent(const poly::Poly &m, const poly::Poly &f)
{
  const poly::Poly g = poly::divmod(m, f).first;
  auto [gcd, s] = poly::gcd_with_cofactor(poly::mod(g, f), f);
  if (poly::degree(gcd) != 0)
    throw Error("minimal polynomial is not squarefree");
  return poly::mod(poly::mul(g, s), m);
}

inline RationalVector random_central(const CenterBasis &basis, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> coeff(-9, 9);
  RationalVector z(basis.basis.front().size(), Rational(0));
  for (const auto &b : basis.basis) {
    const Rational r(coeff(rng));
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] += r * b[i];
  }
  return z;
}

inline bool verify_exact(const CoherentConfiguration &cc, const std::vector<RationalVector> &ids)
{
  const std::size_t D = cc.rank();
  RationalVector total(D, Rational(0));
  for (std::size_t s = 0; s < ids.size(); ++s) {
    if (algebra_multiply(cc, ids[s], ids[s]) != ids[s])
      return false;
    if (adjoint(cc, ids[s]) != ids[s])
      return false;
    if (!is_central(cc, ids[s]))
      return false;
    for (std::size_t t = s + 1; t < ids.size(); ++t)
      for (const auto &x : algebra_multiply(cc, ids[s], ids[t]))
        if (x != 0)
          return false;
    for (std::size_t i = 0; i < D; ++i)
      total[i] += ids[s][i];
  }
  RationalVector identity(D, Rational(0));
  identity[0] = 1;
  return total == identity;
}

inline bool verify_numeric(const CoherentConfiguration &cc, const std::vector<std::vector<Complex>> &ids, double tol)
{
  const std::size_t D = cc.rank();
  std::vector<Complex> total(D, Complex(0));
  for (std::size_t s = 0; s < ids.size(); ++s) {
    if (max_abs(numeric_sub(algebra_multiply(cc, ids[s], ids[s]), ids[s])) > tol)
      return false;
    if (max_abs(numeric_sub(adjoint(cc, ids[s]), ids[s])) > tol)
      return false;
    for (std::size_t j = 0; j < D; ++j) {
      std::vector<Complex> a(D, Complex(0));
      a[j] = 1;
      if (max_abs(numeric_sub(algebra_multiply(cc, ids[s], a), algebra_multiply(cc, a, ids[s]))) > tol)
        return false;
    }
    for (std::size_t t = s + 1; t < ids.size(); ++t)
      if (max_abs(algebra_multiply(cc, ids[s], ids[t])) > tol)
        return false;
    for (std::size_t i = 0; i < D; ++i)
      total[i] += ids[s][i];
  }
  total[0] -= 1;
  return max_abs(total) <= tol;
}

/// Principal first, then ascending trace, then coefficients lexicographically.
inline void canonical_order(CentralIdempotentSet &set)
{
  auto &items = set.items;
  auto is_principal = [&](const CentralIdempotent &e) {
    const double inv_n = 1.0 / static_cast<double>(set.n);
    for (const auto &c : e.numeric)
      if (std::abs(c - Complex(inv_n, 0)) > 1e-7)
        return false;
    return true;
  };
  std::stable_sort(items.begin(), items.end(), [&](const CentralIdempotent &a, const CentralIdempotent &b) {
    const bool pa = is_principal(a), pb = is_principal(b);
    if (pa != pb)
      return pa;
    const double ta = std::round(a.numeric[0].real() * static_cast<double>(set.n));
    const double tb = std::round(b.numeric[0].real() * static_cast<double>(set.n));
    if (ta != tb)
      return ta < tb;
    for (std::size_t i = 0; i < a.numeric.size(); ++i) {
      const auto &x = a.numeric[i], &y = b.numeric[i];
      if (std::abs(x.real() - y.real()) > 1e-9)
        return x.real() < y.real();
      if (std::abs(x.imag() - y.imag()) > 1e-9)
        return x.imag() < y.imag();
    }
    return false;
  });
}

struct SplitAttempt
{
  RationalVector z;
  poly::Poly minpoly;
  poly::Factorisation factors;
};

/// Draws central elements until one has a minimal polynomial of degree
/// dim Z(A), i.e. separates every simple component.
inline SplitAttempt separating_element(const CoherentConfiguration &cc, const CenterBasis &basis,
                                       const IdempotentOptions &opt, std::size_t &attempts)
{
  std::mt19937_64 rng(opt.seed);
  for (attempts = 1; attempts <= opt.max_attempts; ++attempts) {
    RationalVector z = random_central(basis, rng);
    poly::Poly m = minimal_polynomial(cc, z);
    if (static_cast<std::size_t>(poly::degree(m)) != basis.dimension())
      continue;
    return {z, m, poly::factor_over_q(m)};
  }
  throw SplitFailure("no separating central element after " + std::to_string(opt.max_attempts) + " attempts");
}

} // namespace detail

/// Central primitive idempotents over C.
///
/// A random integral central element z (coefficients in [-9, 9] on the
/// center basis, drawn from a seeded generator) is accepted once its minimal
/// polynomial m has degree dim Z(A). Each root r of m gives the projector
/// prod_{s != r} (z - s)/(r - s); for rational roots this is computed exactly
/// from the factor idempotent, otherwise numerically with a rational
/// reconstruction attempt. A split that fails the identity checks is
/// discarded and a new z drawn.
inline CentralIdempotentSet central_primitive_idempotents(const CoherentConfiguration &cc,
                                                          const IdempotentOptions &opt = {})
{
  const auto basis = center_basis(cc);
  CentralIdempotentSet out;
  out.n = cc.n();
  out.tol = opt.tol;
  out.seed = opt.seed;
  const std::size_t D = cc.rank();

  std::mt19937_64 rng(opt.seed);
  for (std::size_t attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    out.items.clear();
    RationalVector z = detail::random_central(basis, rng);
    poly::Poly m = minimal_polynomial(cc, z);
    if (static_cast<std::size_t>(poly::degree(m)) != basis.dimension())
      continue;
    const auto fact = poly::factor_over_q(m);

    std::vector<poly::Complex> all_roots;
    for (const auto &f : fact.factors)
      all_roots.insert(all_roots.end(), f.roots.begin(), f.roots.end());
    const auto zn = detail::to_numeric(z);

    for (const auto &f : fact.factors) {
      if (poly::degree(f.poly) == 1) {
        CentralIdempotent e;
        e.exact = evaluate(cc, detail::factor_idempotent(m, f.poly), z);
        e.numeric = detail::to_numeric(*e.exact);
        out.items.push_back(std::move(e));
        continue;
      }
      for (const auto &r : f.roots) {
        std::vector<Complex> acc(D, Complex(0));
        acc[0] = 1;
        for (const auto &s : all_roots) {
          if (s == r)
            continue;
          const Complex rs(static_cast<double>(r.real()), static_cast<double>(r.imag()));
          const Complex ss(static_cast<double>(s.real()), static_cast<double>(s.imag()));
          std::vector<Complex> factor = zn;
          factor[0] -= ss;
          for (auto &c : factor)
            c /= (rs - ss);
          acc = algebra_multiply(cc, acc, factor);
        }
        CentralIdempotent e;
        e.numeric = acc;
        e.factor_degree = static_cast<std::size_t>(poly::degree(f.poly));
        RationalVector rec;
        bool ok = true;
        for (const auto &c : acc) {
          if (std::abs(c.imag()) > opt.tol) {
            ok = false;
            break;
          }
          auto q = reconstruct_rational(c.real(), 1000000000000LL, opt.tol);
          if (!q) {
            ok = false;
            break;
          }
          rec.push_back(*q);
        }
        if (ok && algebra_multiply(cc, rec, rec) == rec)
          e.exact = rec;
        out.items.push_back(std::move(e));
      }
    }

    std::vector<std::vector<Complex>> numeric;
    for (const auto &e : out.items)
      numeric.push_back(e.numeric);
    double trace_sum = 0;
    for (const auto &e : out.items)
      trace_sum += e.numeric[0].real() * static_cast<double>(cc.n());
    if (std::abs(trace_sum - static_cast<double>(cc.n())) > 1e-6 || !detail::verify_numeric(cc, numeric, opt.tol))
      continue;

    out.exact = std::all_of(out.items.begin(), out.items.end(), [](const auto &e) { return e.exact.has_value(); });
    if (out.exact) {
      std::vector<RationalVector> ex;
      for (const auto &e : out.items)
        ex.push_back(*e.exact);
      out.exact = detail::verify_exact(cc, ex);
    }
    out.attempts = attempt;
    out.separating_element = z;
    out.minimal_polynomial = m;
    out.factorisation_complete = fact.complete;
    detail::canonical_order(out);
    return out;
  }
  throw SplitFailure("central idempotents not separated after " + std::to_string(opt.max_attempts) +
                     " random central elements");
}

/// The split over Q: one exact idempotent per irreducible rational factor of
/// the minimal polynomial of a separating central element. Each is a sum of
/// central primitive idempotents over a Galois orbit.
inline CentralIdempotentSet rational_central_idempotents(const CoherentConfiguration &cc,
                                                         const IdempotentOptions &opt = {})
{
  const auto basis = center_basis(cc);
  CentralIdempotentSet out;
  out.n = cc.n();
  out.tol = opt.tol;
  out.seed = opt.seed;
  out.rational_split = true;
  auto attempt = detail::separating_element(cc, basis, opt, out.attempts);
  std::vector<RationalVector> ex;
  for (const auto &f : attempt.factors.factors) {
    CentralIdempotent e;
    e.exact = evaluate(cc, detail::factor_idempotent(attempt.minpoly, f.poly), attempt.z);
    e.numeric = detail::to_numeric(*e.exact);
    e.factor_degree = static_cast<std::size_t>(poly::degree(f.poly));
    ex.push_back(*e.exact);
    out.items.push_back(std::move(e));
  }
  if (!detail::verify_exact(cc, ex))
    throw SplitFailure("rational idempotents failed exact verification");
  out.exact = true;
  out.separating_element = attempt.z;
  out.minimal_polynomial = attempt.minpoly;
  out.factorisation_complete = attempt.factors.complete;
  detail::canonical_order(out);
  return out;
}

/// Traces of the idempotents (isotypic component dimensions). Throws
/// NonIntegerTrace when a trace is not a nonnegative integer or they do not sum to n.
inline std::vector<long> isotypic_dimensions(const CentralIdempotentSet &ids)
{
  std::vector<long> dims;
  long total = 0;
  for (const auto &e : ids.items) {
    long t;
    if (e.exact) {
      const Rational tr = (*e.exact)[0] * Rational(static_cast<long>(ids.n));
      if (!is_integer(tr) || tr < 0)
        throw NonIntegerTrace("trace " + to_string(tr) + " is not a nonnegative integer");
      t = tr.get_num().get_si();
    } else {
      const double tr = e.numeric[0].real() * static_cast<double>(ids.n);
      const double r = std::round(tr);
      if (std::abs(tr - r) > std::max(ids.tol, 1e-9) * static_cast<double>(ids.n) || r < 0 ||
          std::abs(e.numeric[0].imag()) > 1e-6)
        throw NonIntegerTrace("trace " + std::to_string(tr) + " is not a nonnegative integer");
      t = static_cast<long>(r);
    }
    dims.push_back(t);
    total += t;
  }
  if (total != static_cast<long>(ids.n))
    throw NonIntegerTrace("traces sum to " + std::to_string(total) + ", expected " + std::to_string(ids.n));
  return dims;
}

/// Sum of the selected idempotents, exact (requires exact items).
inline RationalVector idempotent_sum(const CentralIdempotentSet &ids, const std::vector<std::size_t> &which)
{
  RationalVector out(ids.items.front().numeric.size(), Rational(0));
  for (auto t : which) {
    if (!ids.items.at(t).exact)
      throw Error("idempotent " + std::to_string(t) + " is not exact");
    const auto &c = *ids.items[t].exact;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += c[i];
  }
  return out;
}

} // namespace cohere

#endif // COHERE_ALGEBRA_HPP
