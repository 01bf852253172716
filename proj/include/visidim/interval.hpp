#pragma once

#include <algorithm>
#include <cassert>
#include <iosfwd>

#include "visidim/rational.hpp"

namespace visidim {

/// Closed interval [lo, hi] of binary64 values that encloses an exact real.
///
/// Every arithmetic operation rounds outward. Rounding direction is decided
/// from the exact error term (TwoSum / FMA residuals), so results that are
/// representable stay degenerate and everything else widens by one ulp on
/// the side where the exact value lies.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double v) : lo_(v), hi_(v) {}  // NOLINT: implicit by design of the arithmetic
  Interval(double lo, double hi) : lo_(lo), hi_(hi) { assert(lo <= hi); }

  static Interval from(const Rational& q);
  static Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }
  /// Interval [-1, 1] * r around zero.
  static Interval symmetric(double r) { return {-r, r}; }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  double mag() const { return std::max(-lo_, hi_); }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains(const Rational& q) const;
  bool degenerate() const { return lo_ == hi_; }

  Interval operator-() const { return {-hi_, -lo_}; }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires 0 not in b.
  friend Interval operator/(const Interval& a, const Interval& b);

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval square(const Interval& x);

/// cos(pi q) and sin(pi q); exact at multiples of 1/2, tight enclosures otherwise.
Interval cos_pi(const Rational& q);
Interval sin_pi(const Rational& q);

inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
inline bool certainly_leq(const Interval& a, const Interval& b) { return a.hi() <= b.lo(); }
inline bool possibly_less(const Interval& a, const Interval& b) { return a.lo() < b.hi(); }

std::ostream& operator<<(std::ostream& os, const Interval& x);

/// Enclosure of sqrt(2), used by the quadratic field and by rotations.
const Interval& sqrt2_enclosure();

}  // namespace visidim
