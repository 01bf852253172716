#include "visidim/quadratic.hpp"

#include "visidim/error.hpp"

namespace visidim {

int QSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  if (b_ == 0 && o.b_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  if (o.a_ == 0 && o.b_ == 0) throw Error(ErrorKind::Validation, "division by zero in Q(sqrt 2)");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  *this *= QSqrt2(o.a_, Rational(-o.b_));
  a_ /= norm;
  b_ /= norm;
  return *this;
}

std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Interval QSqrt2::enclosure() const {
  if (b_ == 0) return Interval::from(a_);
  return Interval::from(a_) + Interval::from(b_) * sqrt2_enclosure();
}

std::string QSqrt2::str() const {
  if (b_ == 0) return to_string(a_);
  std::string out = a_ == 0 ? std::string() : to_string(a_);
  if (a_ != 0 && b_ > 0) out += "+";
  return out + to_string(b_) + "*sqrt2";
}

QSqrt2 abs(const QSqrt2& x) { return x.sign() < 0 ? -x : x; }

}  // namespace visidim
