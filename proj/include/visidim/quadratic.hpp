#pragma once

#include <compare>
#include <string>

#include "visidim/interval.hpp"
#include "visidim/rational.hpp"

namespace visidim {

/// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// cos and sin of every multiple of pi/4 live here, so rotations by those
/// angles applied to rational data stay exact. Rationals embed with b = 0.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT: Q embeds in Q(sqrt 2)
  QSqrt2(int a) : a_(a) {}                  // NOLINT
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 root_two() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& root_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  /// -1, 0 or +1, decided exactly.
  int sign() const;

  QSqrt2 operator-() const { return {Rational(-a_), Rational(-b_)}; }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
  friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
  friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
  friend QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y);

  Interval enclosure() const;
  double approx() const { return enclosure().mid(); }

  /// "p/q" when rational, otherwise "a+b*sqrt2".
  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

QSqrt2 abs(const QSqrt2& x);

}  // namespace visidim
