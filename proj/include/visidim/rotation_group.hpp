#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "visidim/interval.hpp"
#include "visidim/ortho.hpp"
#include "visidim/quadratic.hpp"
#include "visidim/vec2.hpp"

namespace visidim {

inline constexpr std::size_t kGroupCap = 4096;

/// Finite subgroup of O(2) generated by rational-angle elements.
///
/// Elements are sorted by (reflect, angle); index 0 is the identity.
class RotationGroup {
 public:
  static RotationGroup closure(std::span<const OrthoElement> generators, std::size_t cap = kGroupCap);
  static RotationGroup trivial();

  std::size_t size() const { return elements_.size(); }
  const std::vector<OrthoElement>& elements() const { return elements_; }
  const OrthoElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const OrthoElement& g) const;
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  /// Every element has angle a multiple of 1/4 (entries in Q(sqrt 2)).
  bool quarter_exact() const;

 private:
  std::vector<OrthoElement> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// Point of S^1 given as g(base) with base a nonzero rational vector.
///
/// Directions built from an angle use base (1, 0). Norms are not
/// normalized: every element of an orbit shares the base norm, so the
/// coordinates <x, d> along an orbit are consistently scaled.
class Direction {
 public:
  Direction() : base_{Rational(1), Rational(0)} {}
  static Direction from_vector(Rational x, Rational y);
  static Direction from_angle(const Rational& pi_multiple);
  /// "a,b" (vector) or "p/q pi" / "p/qpi" (angle).
  static Direction parse(const std::string& text);

  const Vec2<Rational>& base() const { return base_; }
  const OrthoElement& transform() const { return transform_; }

  Direction transformed(const OrthoElement& g) const;
  /// Counter-clockwise quarter turn of this vector.
  Direction perpendicular() const { return transformed(OrthoElement::rotation(Rational(1, 2))); }
  Direction opposite() const { return transformed(OrthoElement::rotation(Rational(1))); }

  /// Exact equality of the vectors g(base). Directions with different bases
  /// compare by exact vectors when both are exact and are otherwise unequal.
  bool same_as(const Direction& other) const;

  std::optional<Vec2<QSqrt2>> exact_vector() const;
  Vec2<Interval> vector() const;
  Interval norm() const;

  std::string str() const;

 private:
  Vec2<Rational> base_;
  OrthoElement transform_;
};

/// {g(theta) : g in group}, deduplicated exactly, in group-element order.
std::vector<Direction> orbit(const RotationGroup& group, const Direction& theta);

}  // namespace visidim
