#include "visidim/similarity.hpp"

#include <cmath>
#include <limits>

#include "visidim/error.hpp"

namespace visidim {

namespace {

Vec2<Interval> enclose(const Vec2<QSqrt2>& v) { return {v.x.enclosure(), v.y.enclosure()}; }

Vec2<QSqrt2> lift(const Vec2<Rational>& v) { return {QSqrt2(v.x), QSqrt2(v.y)}; }

}  // namespace

Similarity Similarity::make(Rational ratio, OrthoElement ortho, const Vec2<Rational>& t) {
  Similarity s;
  s.ratio = std::move(ratio);
  s.ortho = std::move(ortho);
  s.exact_translation = lift(t);
  s.translation = enclose(*s.exact_translation);
  return s;
}

Similarity Similarity::with_fixed_point(Rational ratio, OrthoElement ortho, const Vec2<Rational>& fixed) {
  // t = p - r O p.
  Similarity s;
  s.ratio = std::move(ratio);
  s.ortho = std::move(ortho);
  const Vec2<QSqrt2> p = lift(fixed);
  if (const auto op = s.ortho.apply(p)) {
    s.exact_translation = p - QSqrt2(s.ratio) * *op;
    s.translation = enclose(*s.exact_translation);
  } else {
    s.exact_translation.reset();
    const Vec2<Interval> pi = enclose(p);
    s.translation = pi - Interval::from(s.ratio) * s.ortho.apply(pi);
  }
  return s;
}

Vec2<Interval> Similarity::apply(const Vec2<Interval>& p) const {
  return Interval::from(ratio) * ortho.apply(p) + translation;
}

std::optional<Vec2<QSqrt2>> Similarity::apply(const Vec2<QSqrt2>& p) const {
  if (!exact_translation) return std::nullopt;
  const auto op = ortho.apply(p);
  if (!op) return std::nullopt;
  return QSqrt2(ratio) * *op + *exact_translation;
}

Vec2<Interval> Similarity::fixed_point() const {
  // (I - r O) x = t, solved by Cramer's rule on the 2x2 system.
  const Interval r = Interval::from(ratio);
  const Interval c = cos_pi(ortho.angle());
  const Interval s = sin_pi(ortho.angle());
  const Interval sign = ortho.reflects() ? Interval(-1.0) : Interval(1.0);
  // Columns of O: (c, s) and (-s * sign, c * sign).
  const Interval a11 = Interval(1.0) - r * c;
  const Interval a12 = r * s * sign;
  const Interval a21 = -(r * s);
  const Interval a22 = Interval(1.0) - r * c * sign;
  const Interval det = a11 * a22 - a12 * a21;
  const Interval x = (translation.x * a22 - a12 * translation.y) / det;
  const Interval y = (a11 * translation.y - a21 * translation.x) / det;
  return {x, y};
}

std::string Similarity::str() const {
  std::string t = exact_translation
                      ? "(" + exact_translation->x.str() + ", " + exact_translation->y.str() + ")"
                      : "(~" + std::to_string(translation.x.mid()) + ", ~" + std::to_string(translation.y.mid()) + ")";
  return "x -> " + to_string(ratio) + " " + ortho.str() + " x + " + t;
}

Similarity compose(const Similarity& a, const Similarity& b) {
  Similarity out;
  out.ratio = a.ratio * b.ratio;
  out.ortho = a.ortho * b.ortho;
  if (a.exact_translation && b.exact_translation) {
    if (const auto moved = a.apply(*b.exact_translation)) {
      out.exact_translation = *moved;
      out.translation = enclose(*moved);
      return out;
    }
  }
  out.exact_translation.reset();
  out.translation = a.apply(b.translation);
  return out;
}

Box2 image_box(const Similarity& s, const Box2& b) {
  // Natural interval extension of the affine map: inclusion monotone and,
  // for a rotated box, the exact axis-parallel hull up to rounding.
  const Vec2<Interval> img = s.apply(Vec2<Interval>{b.x, b.y});
  return {img.x, img.y};
}

std::optional<ExactBox> image_box(const Similarity& s, const ExactBox& b) {
  if (!s.exact_translation || !s.ortho.quarter_exact()) return std::nullopt;
  const Vec2<QSqrt2> corners[4] = {
      {b.lo.x, b.lo.y}, {b.hi.x, b.lo.y}, {b.lo.x, b.hi.y}, {b.hi.x, b.hi.y}};
  std::optional<ExactBox> out;
  for (const auto& c : corners) {
    const Vec2<QSqrt2> p = *s.apply(c);
    if (!out) {
      out = ExactBox{p, p};
      continue;
    }
    if (p.x < out->lo.x) out->lo.x = p.x;
    if (p.y < out->lo.y) out->lo.y = p.y;
    if (p.x > out->hi.x) out->hi.x = p.x;
    if (p.y > out->hi.y) out->hi.y = p.y;
  }
  return out;
}

Box2 Ball::bounding_box() const {
  const Interval r = Interval::symmetric(radius);
  return {Interval(center.x) + r, Interval(center.y) + r};
}

Ball enclosing_ball(std::span<const Similarity> maps) {
  if (maps.empty()) throw Error(ErrorKind::EmptySystem, "no maps");
  for (const auto& m : maps) {
    if (m.ratio >= 1 || m.ratio <= 0) {
      throw Error(ErrorKind::NonContractive, "ratio " + to_string(m.ratio) + " not in (0,1)");
    }
  }
  double wsum = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (const auto& m : maps) {
    const double w = m.ratio.get_d();
    const Vec2<Interval> p = m.fixed_point();
    cx += w * p.x.mid();
    cy += w * p.y.mid();
    wsum += w;
  }
  Ball ball;
  // Any center works; the radius is certified for the center actually stored.
  ball.center = {cx / wsum, cy / wsum};
  const Vec2<Interval> c{Interval(ball.center.x), Interval(ball.center.y)};
  double radius = 0.0;
  for (const auto& m : maps) {
    const Vec2<Interval> d = m.apply(c) - c;
    const Interval dist = sqrt(square(d.x) + square(d.y));
    const Interval bound = dist / (Interval(1.0) - Interval::from(m.ratio));
    radius = std::max(radius, bound.hi());
  }
  ball.radius = radius;
  return ball;
}

}  // namespace visidim
