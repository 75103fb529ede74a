#ifndef COHERE_DELSARTE_HPP
#define COHERE_DELSARTE_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "cc.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace cohere {

/// Outer distribution D(u) = sum_i (1/k_i)(u A_i^T u^T) A_i with k_i = n * valency_i.
/// Stored by its coefficients on the A_i basis.
struct DistributionMatrix
{
  RationalVector coefficients;
  RationalVector source;

  RationalMatrix dense(const CoherentConfiguration &cc) const { return expand(cc, coefficients); }
};

inline DistributionMatrix outer_distribution(const CoherentConfiguration &cc, const RationalVector &u)
{
  const auto s = pair_sums(cc, u);
  DistributionMatrix d{RationalVector(cc.rank()), u};
  for (std::size_t i = 0; i < cc.rank(); ++i)
    d.coefficients[i] = s[i] / cc.frobenius_k(i);
  return d;
}

/// v D(u) v^T, exactly.
inline Rational distribution_form(const CoherentConfiguration &cc, const DistributionMatrix &d, const RationalVector &v)
{
  const auto t = pair_sums(cc, v);
  Rational acc = 0;
  for (std::size_t i = 0; i < cc.rank(); ++i)
    acc += d.coefficients[i] * t[i];
  return acc;
}

struct ConstantIntersection
{
  bool constant = false;
  /// The forced constant (u.1)(v.1)/n, present when constant.
  std::optional<Rational> value;
  Rational lhs; // v D(u) v^T
  Rational rhs; // (uJu^T)(vJv^T)/n^2
};

/// u . v^g is constant over the group iff v D(u) v^T = (uJu^T)(vJv^T)/n^2.
inline ConstantIntersection constant_intersection_test(const CoherentConfiguration &cc, const RationalVector &u,
                                                       const RationalVector &v)
{
  const auto d = outer_distribution(cc, u);
  const Rational n(static_cast<long>(cc.n()));
  const Rational su = sum(u), sv = sum(v);
  ConstantIntersection out;
  out.lhs = distribution_form(cc, d, v);
  out.rhs = (su * su) * (sv * sv) / (n * n);
  out.constant = out.lhs == out.rhs;
  if (out.constant)
    out.value = su * sv / n;
  return out;
}

/// x Pi x^T for a central idempotent given by coefficients, from the pair sums of x.
inline Rational quadratic_form(const RationalVector &coeffs, const RationalVector &sums)
{
  Rational acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc += coeffs[i] * sums[i];
  return acc;
}

inline Complex quadratic_form(const std::vector<Complex> &coeffs, const RationalVector &sums)
{
  Complex acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc += coeffs[i] * sums[i].get_d();
  return acc;
}

/// Per-component values (u Pi_t u^T, v Pi_t v^T) for t = 0..m, numeric.
struct ComponentWeights
{
  std::vector<double> u, v;
};

inline ComponentWeights component_weights(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                          const RationalVector &u, const RationalVector &v)
{
  const auto su = pair_sums(cc, u), sv = pair_sums(cc, v);
  ComponentWeights w;
  for (const auto &e : ids.items) {
    if (e.exact) {
      w.u.push_back(quadratic_form(*e.exact, su).get_d());
      w.v.push_back(quadratic_form(*e.exact, sv).get_d());
    } else {
      w.u.push_back(quadratic_form(e.numeric, su).real());
      w.v.push_back(quadratic_form(e.numeric, sv).real());
    }
  }
  return w;
}

/// (u Pi_t u^T)(v Pi_t v^T) = 0 for every nonprincipal t. Exact for exact
/// idempotents, otherwise |.| <= tol * |u|^2 |v|^2.
inline bool is_design_orthogonal(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                 const RationalVector &u, const RationalVector &v)
{
  const auto su = pair_sums(cc, u), sv = pair_sums(cc, v);
  const double scale = dot(u, u).get_d() * dot(v, v).get_d();
  for (std::size_t t = 1; t < ids.items.size(); ++t) {
    const auto &e = ids.items[t];
    if (e.exact) {
      if (quadratic_form(*e.exact, su) * quadratic_form(*e.exact, sv) != 0)
        return false;
    } else {
      const Complex a = quadratic_form(e.numeric, su), b = quadratic_form(e.numeric, sv);
      if (std::abs(a * b) > ids.tol * std::max(1.0, scale))
        return false;
    }
  }
  return true;
}

/// Checks that design-orthogonality implies constant intersection for (u, v).
/// True when the implication holds (including vacuously).
inline bool design_orthogonal_implies_constant_check(const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
                                                     const RationalVector &u, const RationalVector &v)
{
  if (!is_design_orthogonal(cc, ids, u, v))
    return true;
  return constant_intersection_test(cc, u, v).constant;
}

/// Exact PSD test of a symmetric rational matrix by LDL^T with diagonal
/// pivoting: PSD iff no negative pivot appears and no zero pivot has a
/// nonzero row.
inline bool psd_check(RationalMatrix m)
{
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw Error("psd_check needs a square matrix");
  if (!(m == m.transpose()))
    return false;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i])
        continue;
      if (m(i, i) < 0)
        return false;
      if (m(i, i) > 0 && piv == n)
        piv = i;
    }
    if (piv == n) {
      // remaining diagonal is zero: PSD forces the remaining block to vanish
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && m(i, j) != 0)
            return false;
      return true;
    }
    done[piv] = true;
    const Rational p = m(piv, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, piv) == 0)
        continue;
      const Rational f = m(i, piv) / p;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j])
          m(i, j) -= f * m(piv, j);
    }
  }
  return true;
}

inline bool psd_check(const CoherentConfiguration &cc, const DistributionMatrix &d) { return psd_check(d.dense(cc)); }

/// Checks sum_i (1/k_i)(x A_i^T x^T)(y A_i y^T) = n sum_j (1/m_j)(x E_j^T x^T)(y E_j y^T)
/// with m_j = n <E_j, E_j>, for a full Frobenius-orthogonal basis {E_j} over a field T.
template <class T>
bool projection_identity_check(const std::vector<Matrix<T>> &a_basis, const std::vector<Matrix<T>> &e_basis,
                               const RationalVector &x, const RationalVector &y)
{
  if (e_basis.empty() || e_basis.size() != a_basis.size())
    throw MissingFixtureBasis("a full E-basis matching the A-basis is required");
  const std::size_t n = a_basis.front().rows();
  const T nn(Rational(static_cast<long>(n)));
  T lhs(0), rhs(0);
  for (const auto &a : a_basis) {
    const T k = (a * a.transpose()).trace();
    lhs += a.transpose().bilinear(x, x) * a.bilinear(y, y) / k;
  }
  for (const auto &e : e_basis) {
    const T m = nn * (e * e.transpose()).trace();
    rhs += e.transpose().bilinear(x, x) * e.bilinear(y, y) / m;
  }
  rhs *= nn;
  return lhs == rhs;
}

} // namespace cohere

#endif // COHERE_DELSARTE_HPP
