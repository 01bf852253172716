#include "visidim/ortho.hpp"

namespace visidim {

OrthoElement::OrthoElement(Rational angle, bool reflect)
    : reflect_(reflect) {
  angle.canonicalize();
  angle_ = floor_mod(angle, 2);
}

OrthoElement OrthoElement::inverse() const {
  // A reflection rot(a) R is an involution.
  if (reflect_) return *this;
  return rotation(Rational(-angle_));
}

OrthoElement operator*(const OrthoElement& a, const OrthoElement& b) {
  // R rot(t) = rot(-t) R.
  Rational angle = a.reflect_ ? Rational(a.angle_ - b.angle_) : Rational(a.angle_ + b.angle_);
  return {std::move(angle), a.reflect_ != b.reflect_};
}

std::strong_ordering operator<=>(const OrthoElement& a, const OrthoElement& b) {
  if (a.reflect_ != b.reflect_) return a.reflect_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.angle_ < b.angle_) return std::strong_ordering::less;
  if (a.angle_ > b.angle_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Vec2<Interval> OrthoElement::apply(const Vec2<Interval>& v) const {
  const Interval c = cos_pi(angle_);
  const Interval s = sin_pi(angle_);
  const Interval vy = reflect_ ? -v.y : v.y;
  return {c * v.x - s * vy, s * v.x + c * vy};
}

std::optional<QSqrt2> exact_cos_pi(const Rational& q) {
  const Rational t = floor_mod(q, 2);
  const Rational k4 = 4 * t;
  if (k4.get_den() != 1) return std::nullopt;
  const QSqrt2 half_root(Rational(0), Rational(1, 2));
  switch (k4.get_num().get_si()) {
    case 0: return QSqrt2(1);
    case 1: return half_root;
    case 2: return QSqrt2(0);
    case 3: return -half_root;
    case 4: return QSqrt2(-1);
    case 5: return -half_root;
    case 6: return QSqrt2(0);
    case 7: return half_root;
    default: return std::nullopt;
  }
}

std::optional<QSqrt2> exact_sin_pi(const Rational& q) {
  return exact_cos_pi(Rational(q - Rational(1, 2)));
}

std::optional<Vec2<QSqrt2>> OrthoElement::apply(const Vec2<QSqrt2>& v) const {
  const auto c = exact_cos_pi(angle_);
  const auto s = exact_sin_pi(angle_);
  if (!c || !s) return std::nullopt;
  const QSqrt2 vy = reflect_ ? -v.y : v.y;
  return Vec2<QSqrt2>{*c * v.x - *s * vy, *s * v.x + *c * vy};
}

std::string OrthoElement::str() const {
  std::string out = "rot(" + to_string(angle_) + " pi)";
  if (reflect_) out += "*R";
  return out;
}

}  // namespace visidim
