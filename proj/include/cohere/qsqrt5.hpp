#ifndef COHERE_QSQRT5_HPP
#define COHERE_QSQRT5_HPP

#include <string>

#include "error.hpp"
#include "rational.hpp"

namespace cohere {

/// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
class QSqrt5
{
public:
  QSqrt5() : a_(0), b_(0) {}
  QSqrt5(int a) : a_(a), b_(0) {}
  QSqrt5(const Rational &a) : a_(a), b_(0) {}
  QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt5 sqrt5() { return QSqrt5(Rational(0), Rational(1)); }

  const Rational &rational_part() const { return a_; }
  const Rational &sqrt5_part() const { return b_; }

  /// Galois conjugate a - b*sqrt(5).
  QSqrt5 conjugate() const { return QSqrt5(a_, -b_); }
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

  QSqrt5 &operator+=(const QSqrt5 &o)
  {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt5 &operator-=(const QSqrt5 &o)
  {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt5 &operator*=(const QSqrt5 &o)
  {
    Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QSqrt5 &operator/=(const QSqrt5 &o)
  {
    const Rational nrm = o.norm();
    if (nrm == 0)
      throw Error("division by zero in Q(sqrt 5)");
    *this *= o.conjugate();
    a_ /= nrm;
    b_ /= nrm;
    return *this;
  }

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5 &y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5 &y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5 &y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5 &y) { return x /= y; }
  friend QSqrt5 operator-(const QSqrt5 &x) { return QSqrt5(-x.a_, -x.b_); }

  friend bool operator==(const QSqrt5 &x, const QSqrt5 &y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt5 &x, const QSqrt5 &y) { return !(x == y); }

  double to_double() const { return a_.get_d() + b_.get_d() * 2.23606797749978969640917; }

  std::string str() const { return to_string(a_) + "+" + to_string(b_) + "*sqrt5"; }

private:
  Rational a_, b_;
};

} // namespace cohere

#endif // COHERE_QSQRT5_HPP
