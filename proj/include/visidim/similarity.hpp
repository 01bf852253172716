#pragma once

#include <optional>
#include <span>
#include <string>

#include "visidim/interval.hpp"
#include "visidim/ortho.hpp"
#include "visidim/quadratic.hpp"
#include "visidim/rational.hpp"
#include "visidim/vec2.hpp"

namespace visidim {

/// Axis-parallel box with certified bounds: [x.lo, x.hi] x [y.lo, y.hi].
struct Box2 {
  Interval x;
  Interval y;

  static Box2 from_corners(const Vec2<double>& lo, const Vec2<double>& hi) {
    return {Interval(lo.x, hi.x), Interval(lo.y, hi.y)};
  }
  bool contains(const Box2& o) const { return x.contains(o.x) && y.contains(o.y); }
  bool contains(const Vec2<double>& p) const { return x.contains(p.x) && y.contains(p.y); }
  friend bool operator==(const Box2&, const Box2&) = default;
};

/// Box with exact corners.
struct ExactBox {
  Vec2<QSqrt2> lo;
  Vec2<QSqrt2> hi;

  Box2 enclosure() const {
    return {Interval::hull(lo.x.enclosure(), hi.x.enclosure()),
            Interval::hull(lo.y.enclosure(), hi.y.enclosure())};
  }
  friend bool operator==(const ExactBox&, const ExactBox&) = default;
};

/// x -> ratio * ortho(x) + translation.
///
/// The translation is held twice: exactly in Q(sqrt 2) whenever every
/// ingredient allows it, and always as a certified enclosure.
struct Similarity {
  Rational ratio{1};
  OrthoElement ortho;
  std::optional<Vec2<QSqrt2>> exact_translation = Vec2<QSqrt2>{};
  Vec2<Interval> translation;

  static Similarity identity() { return {}; }
  static Similarity make(Rational ratio, OrthoElement ortho, const Vec2<Rational>& t);
  /// The map with the given ratio and orthogonal part that fixes `fixed`.
  static Similarity with_fixed_point(Rational ratio, OrthoElement ortho, const Vec2<Rational>& fixed);

  bool is_exact() const { return exact_translation.has_value(); }

  Vec2<Interval> apply(const Vec2<Interval>& p) const;
  std::optional<Vec2<QSqrt2>> apply(const Vec2<QSqrt2>& p) const;

  /// Unique fixed point (requires ratio < 1).
  Vec2<Interval> fixed_point() const;

  std::string str() const;
};

/// a o b.
Similarity compose(const Similarity& a, const Similarity& b);

/// Certified enclosure of s(b); inclusion monotone in b.
Box2 image_box(const Similarity& s, const Box2& b);

/// Exact bounding box of s(b) when s is exact and its angle is a multiple of 1/4.
std::optional<ExactBox> image_box(const Similarity& s, const ExactBox& b);

/// Closed disc with binary64 center (held exactly) and certified radius.
struct Ball {
  Vec2<double> center;
  double radius = 0.0;

  Box2 bounding_box() const;
  double diameter() const { return 2.0 * radius; }
};

/// Disc B with f_i(B) contained in B for every map.
///
/// The center is the ratio-weighted mean of the maps' fixed points and the
/// radius max_i |f_i(c) - c| / (1 - r_i), rounded up.
Ball enclosing_ball(std::span<const Similarity> maps);

}  // namespace visidim
