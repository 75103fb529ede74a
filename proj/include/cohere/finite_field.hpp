#ifndef COHERE_FINITE_FIELD_HPP
#define COHERE_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace cohere {

/// GF(q) for q = p^e <= 81. Elements are integers 0..q-1 whose base-p digits
/// are the coefficients (low degree first) of a polynomial reduced modulo a
/// fixed Conway polynomial.
class FiniteField
{
public:
  using Element = int;

  explicit FiniteField(int q) : q_(q)
  {
    if (q < 2 || q > 81)
      throw UnsupportedOrder("field order " + std::to_string(q) + " outside 2..81");
    p_ = smallest_prime_factor(q);
    e_ = 0;
    for (int t = q; t > 1; t /= p_) {
      if (t % p_ != 0)
        throw UnsupportedOrder(std::to_string(q) + " is not a prime power");
      ++e_;
    }
    if (e_ == 1)
      modulus_ = {0, 1};
    else
      modulus_ = conway().at(q);
    build_tables();
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  /// Monic modulus, low degree first (x for prime fields).
  const std::vector<int> &modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element inv(Element a) const
  {
    if (a == 0)
      throw Error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }
  Element pow(Element a, long k) const
  {
    Element r = 1;
    for (long i = 0; i < k; ++i)
      r = mul(r, a);
    return r;
  }
  /// x -> x^p.
  Element frobenius(Element a) const { return pow(a, p_); }
  /// Least element of multiplicative order q-1.
  Element primitive_element() const { return primitive_; }
  /// The element represented by the integer k (for prime fields, k mod p).
  Element from_int(long k) const
  {
    long r = k % p_;
    if (r < 0)
      r += p_;
    return static_cast<Element>(r);
  }

private:
  static int smallest_prime_factor(int q)
  {
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0)
        return d;
    return q;
  }

  static const std::map<int, std::vector<int>> &conway()
  {
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},          {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 1, 1, 0, 1}}, {9, {2, 2, 1}},
        {27, {1, 2, 0, 1}},       {81, {2, 1, 0, 0, 1}},       {25, {2, 4, 1}},
        {49, {3, 6, 1}},
    };
    return table;
  }

  std::vector<int> digits(Element a) const
  {
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i, a /= p_)
      d[i] = a % p_;
    return d;
  }

  Element from_digits(const std::vector<int> &d) const
  {
    Element a = 0;
    for (int i = e_ - 1; i >= 0; --i)
      a = a * p_ + d[i];
    return a;
  }

  void build_tables()
  {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      const auto da = digits(a);
      std::vector<int> dn(e_);
      for (int i = 0; i < e_; ++i)
        dn[i] = (p_ - da[i]) % p_;
      neg_[a] = from_digits(dn);
      for (int b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<int> s(e_);
        for (int i = 0; i < e_; ++i)
          s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = from_digits(s);
        // schoolbook product then reduction by the monic modulus
        std::vector<int> prod(2 * e_, 0);
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int k = 2 * e_ - 1; k >= e_; --k) {
          const int c = prod[k];
          if (c == 0)
            continue;
          for (int i = 0; i <= e_; ++i)
            prod[k - e_ + i] = ((prod[k - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        prod.resize(e_);
        mul_[a * q_ + b] = from_digits(prod);
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) {
          inv_[a] = b;
          break;
        }
    primitive_ = 0;
    for (int g = 1; g < q_ && primitive_ == 0; ++g) {
      int x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q_ - 1)
        primitive_ = g;
    }
    if (q_ == 2)
      primitive_ = 1;
  }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
  Element primitive_ = 0;
};

inline FiniteField gf(int q) { return FiniteField(q); }

} // namespace cohere

#endif // COHERE_FINITE_FIELD_HPP
