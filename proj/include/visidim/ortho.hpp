#pragma once

#include <compare>
#include <optional>
#include <string>

#include "visidim/interval.hpp"
#include "visidim/quadratic.hpp"
#include "visidim/rational.hpp"
#include "visidim/vec2.hpp"

namespace visidim {

/// Element of O(2) with a rational rotation angle.
///
/// Represents rot(pi * angle) when reflect is false and rot(pi * angle) * R
/// otherwise, where R(x, y) = (x, -y). The angle is reduced to [0, 2).
class OrthoElement {
 public:
  OrthoElement() = default;
  OrthoElement(Rational angle, bool reflect);

  static OrthoElement identity() { return {}; }
  static OrthoElement rotation(Rational angle) { return {std::move(angle), false}; }
  /// Reflection across the line through the origin at angle pi * axis.
  static OrthoElement reflection(const Rational& axis) { return {Rational(2 * axis), true}; }

  const Rational& angle() const { return angle_; }
  bool reflects() const { return reflect_; }
  bool is_identity() const { return angle_ == 0 && !reflect_; }
  /// Determinant: +1 for rotations, -1 for reflections.
  int det() const { return reflect_ ? -1 : 1; }

  /// True when the matrix entries lie in Q(sqrt 2), i.e. angle is a multiple of 1/4.
  bool quarter_exact() const { return Rational(4 * angle_).get_den() == 1; }
  /// True when the matrix entries are rational, i.e. angle is a multiple of 1/2.
  bool axis_aligned() const { return Rational(2 * angle_).get_den() == 1; }

  OrthoElement inverse() const;

  friend OrthoElement operator*(const OrthoElement& a, const OrthoElement& b);
  friend bool operator==(const OrthoElement&, const OrthoElement&) = default;
  friend std::strong_ordering operator<=>(const OrthoElement& a, const OrthoElement& b);

  Vec2<Interval> apply(const Vec2<Interval>& v) const;
  /// Exact image; empty when the angle is not a multiple of 1/4.
  std::optional<Vec2<QSqrt2>> apply(const Vec2<QSqrt2>& v) const;

  std::string str() const;

 private:
  Rational angle_{0};
  bool reflect_ = false;
};

/// Exact cos(pi q), sin(pi q) for q a multiple of 1/4.
std::optional<QSqrt2> exact_cos_pi(const Rational& q);
std::optional<QSqrt2> exact_sin_pi(const Rational& q);

}  // namespace visidim
