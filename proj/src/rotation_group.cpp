#include "visidim/rotation_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "visidim/error.hpp"

namespace visidim {

RotationGroup RotationGroup::trivial() {
  const OrthoElement id;
  return closure(std::span<const OrthoElement>(&id, 1));
}

RotationGroup RotationGroup::closure(std::span<const OrthoElement> generators, std::size_t cap) {
  std::set<OrthoElement> found{OrthoElement::identity()};
  std::deque<OrthoElement> frontier{OrthoElement::identity()};
  while (!frontier.empty()) {
    const OrthoElement g = frontier.front();
    frontier.pop_front();
    for (const auto& s : generators) {
      OrthoElement h = g * s;
      if (found.insert(h).second) {
        if (found.size() > cap) {
          throw Error(ErrorKind::GroupCapExceeded,
                      "closure exceeds " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(h));
      }
    }
  }
  RotationGroup group;
  group.elements_.assign(found.begin(), found.end());
  for (const auto& s : generators) group.generators_.push_back(*group.index_of(s));
  const std::size_t n = group.size();
  group.table_.resize(n * n);
  group.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      group.table_[a * n + b] = *group.index_of(group.elements_[a] * group.elements_[b]);
    }
    group.inverse_[a] = *group.index_of(group.elements_[a].inverse());
  }
  return group;
}

std::optional<std::size_t> RotationGroup::index_of(const OrthoElement& g) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool RotationGroup::quarter_exact() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const OrthoElement& g) { return g.quarter_exact(); });
}

Direction Direction::from_vector(Rational x, Rational y) {
  if (x == 0 && y == 0) throw Error(ErrorKind::Validation, "zero direction vector");
  Direction d;
  d.base_ = {std::move(x), std::move(y)};
  return d;
}

Direction Direction::from_angle(const Rational& pi_multiple) {
  Direction d;
  d.transform_ = OrthoElement::rotation(pi_multiple);
  return d;
}

Direction Direction::parse(const std::string& text) {
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return from_vector(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
  }
  std::string s = text;
  if (const auto pi = s.find("pi"); pi != std::string::npos) {
    s.erase(pi);
    while (!s.empty() && (s.back() == ' ' || s.back() == '*')) s.pop_back();
    if (s.empty() || s == "+") return from_angle(Rational(1));
    if (s == "-") return from_angle(Rational(-1));
    return from_angle(parse_rational(s));
  }
  throw Error(ErrorKind::Parse, "direction must be 'a,b' or 'p/q pi': '" + text + "'");
}

Direction Direction::transformed(const OrthoElement& g) const {
  Direction d = *this;
  d.transform_ = g * transform_;
  return d;
}

namespace {

// Index k with the base at angle k pi / 4, when it lies on an axis or diagonal.
std::optional<int> eighth_turn_index(const Vec2<Rational>& b) {
  const int sx = sgn(b.x);
  const int sy = sgn(b.y);
  if (sy == 0) return sx > 0 ? 0 : 4;
  if (sx == 0) return sy > 0 ? 2 : 6;
  if (abs(b.x) != abs(b.y)) return std::nullopt;
  if (sx > 0) return sy > 0 ? 1 : 7;
  return sy > 0 ? 3 : 5;
}

}  // namespace

bool Direction::same_as(const Direction& other) const {
  if (base_ == other.base_) {
    const OrthoElement h = transform_.inverse() * other.transform_;
    if (h.is_identity()) return true;
    if (!h.reflects()) return false;
    // rot(a) R fixes a vector at angle phi iff a = 2 phi / pi (mod 2); for a
    // rational vector that only happens on axes and diagonals.
    const auto k = eighth_turn_index(base_);
    return k && h.angle() == floor_mod(Rational(*k, 2), 2);
  }
  const auto a = exact_vector();
  const auto b = other.exact_vector();
  return a && b && *a == *b;
}

std::optional<Vec2<QSqrt2>> Direction::exact_vector() const {
  return transform_.apply(Vec2<QSqrt2>{QSqrt2(base_.x), QSqrt2(base_.y)});
}

Vec2<Interval> Direction::vector() const {
  if (const auto v = exact_vector()) return {v->x.enclosure(), v->y.enclosure()};
  return transform_.apply(Vec2<Interval>{Interval::from(base_.x), Interval::from(base_.y)});
}

Interval Direction::norm() const {
  const Interval x = Interval::from(base_.x);
  const Interval y = Interval::from(base_.y);
  return sqrt(square(x) + square(y));
}

std::string Direction::str() const {
  const bool unit_x = base_.x == 1 && base_.y == 0;
  if (unit_x && !transform_.reflects()) return to_string(transform_.angle()) + "pi";
  if (transform_.is_identity()) return to_string(base_.x) + "," + to_string(base_.y);
  if (const auto v = exact_vector()) return v->x.str() + "," + v->y.str();
  return transform_.str() + "(" + to_string(base_.x) + "," + to_string(base_.y) + ")";
}

std::vector<Direction> orbit(const RotationGroup& group, const Direction& theta) {
  std::vector<Direction> out;
  for (const auto& g : group.elements()) {
    Direction d = theta.transformed(g);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Direction& e) { return e.same_as(d); });
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace visidim
