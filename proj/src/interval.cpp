#include "visidim/interval.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace visidim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double next_down(double x) { return std::nextafter(x, -kInf); }
double next_up(double x) { return std::nextafter(x, kInf); }

// a + b = s + e exactly (Knuth TwoSum).
double sum_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return sum_error(a, b, s) < 0 ? next_down(s) : s;
}

double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return sum_error(a, b, s) > 0 ? next_up(s) : s;
}

double mul_down(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  const double e = std::fma(a, b, -p);
  // Products in the subnormal range lose the exactness of the residual.
  if (p != 0.0 && std::abs(p) < std::numeric_limits<double>::min()) return next_down(p);
  return e < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  const double e = std::fma(a, b, -p);
  if (p != 0.0 && std::abs(p) < std::numeric_limits<double>::min()) return next_up(p);
  return e > 0 ? next_up(p) : p;
}

// Sign of (a / b - q) for q = fl(a / b).
int residual_sign(double a, double b, double q) {
  const double r = std::fma(-q, b, a);
  if (r == 0) return 0;
  return (r > 0) == (b > 0) ? 1 : -1;
}

double div_down(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  return residual_sign(a, b, q) < 0 ? next_down(q) : q;
}

double div_up(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  return residual_sign(a, b, q) > 0 ? next_up(q) : q;
}

}  // namespace

Interval Interval::from(const Rational& q) { return {round_down(q), round_up(q)}; }

bool Interval::contains(const Rational& q) const {
  return Rational(lo_) <= q && q <= Rational(hi_);
}

Interval operator+(const Interval& a, const Interval& b) {
  return {add_down(a.lo_, b.lo_), add_up(a.hi_, b.hi_)};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {add_down(a.lo_, -b.hi_), add_up(a.hi_, -b.lo_)};
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.degenerate() && b.degenerate()) {
    const double lo = mul_down(a.lo_, b.lo_);
    const double hi = mul_up(a.lo_, b.lo_);
    return {lo, hi};
  }
  const double c[4][2] = {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}};
  double lo = kInf;
  double hi = -kInf;
  for (const auto& p : c) {
    lo = std::min(lo, mul_down(p[0], p[1]));
    hi = std::max(hi, mul_up(p[0], p[1]));
  }
  return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  assert(b.lo_ > 0 || b.hi_ < 0);
  const double c[4][2] = {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}};
  double lo = kInf;
  double hi = -kInf;
  for (const auto& p : c) {
    lo = std::min(lo, div_down(p[0], p[1]));
    hi = std::max(hi, div_up(p[0], p[1]));
  }
  return {lo, hi};
}

Interval sqrt(const Interval& x) {
  auto down = [](double v) {
    if (v <= 0) return 0.0;
    const double s = std::sqrt(v);
    return std::fma(-s, s, v) < 0 ? next_down(s) : s;
  };
  auto up = [](double v) {
    if (v <= 0) return 0.0;
    const double s = std::sqrt(v);
    return std::fma(-s, s, v) > 0 ? next_up(s) : s;
  };
  return {down(x.lo()), up(x.hi())};
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return {0.0, std::max(-x.lo(), x.hi())};
}

Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval square(const Interval& x) {
  const Interval m = abs(x);
  return {mul_down(m.lo(), m.lo()), mul_up(m.hi(), m.hi())};
}

const Interval& sqrt2_enclosure() {
  static const Interval s = sqrt(Interval(2.0));
  return s;
}

Interval cos_pi(const Rational& q) {
  const Rational t = floor_mod(q, 2);
  if (t == 0) return 1.0;
  if (t == 1) return -1.0;
  if (t == Rational(1, 2) || t == Rational(3, 2)) return 0.0;
  const Interval half_root = sqrt2_enclosure() * Interval(0.5);
  if (t == Rational(1, 4) || t == Rational(7, 4)) return half_root;
  if (t == Rational(3, 4) || t == Rational(5, 4)) return -half_root;
  // libm cos is within one ulp; pi * t carries at most ~1.5e-15 absolute
  // error and cos is 1-Lipschitz.
  const double c = std::cos(std::numbers::pi * t.get_d());
  constexpr double kSlack = 4e-15;
  return {std::max(-1.0, c - kSlack), std::min(1.0, c + kSlack)};
}

Interval sin_pi(const Rational& q) { return cos_pi(Rational(q - Rational(1, 2))); }

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lo() << ", " << x.hi() << ']';
}

}  // namespace visidim
