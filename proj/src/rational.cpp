#include "visidim/rational.hpp"

#include <cmath>
#include <limits>

#include "visidim/error.hpp"

namespace visidim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::OpenSetViolation: return "OpenSetViolation";
    case ErrorKind::EmptySystem: return "EmptySystem";
    case ErrorKind::NonContractive: return "NonContractive";
    case ErrorKind::GroupCapExceeded: return "GroupCapExceeded";
    case ErrorKind::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorKind::OrbitMismatch: return "OrbitMismatch";
    case ErrorKind::UnclassifiedProjection: return "UnclassifiedProjection";
    case ErrorKind::PlaneIntersectsSet: return "PlaneIntersectsSet";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::ScaleOrder: return "ScaleOrder";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::IrrationalInput: return "IrrationalInput";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    const mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac)) {
      throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
    }
    mpz_class num(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational floor_mod(const Rational& a, const Rational& m) {
  Rational r = a - m * floor(Rational(a / m));
  r.canonicalize();
  return r;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::Validation, "non-finite value");
  Rational q(v);  // exact for binary64
  q.canonicalize();
  return q;
}

double round_down(const Rational& q) {
  const double d = q.get_d();  // truncates toward zero
  if (Rational(d) == q) return d;
  return q > 0 ? d : std::nextafter(d, -std::numeric_limits<double>::infinity());
}

double round_up(const Rational& q) {
  const double d = q.get_d();
  if (Rational(d) == q) return d;
  return q > 0 ? std::nextafter(d, std::numeric_limits<double>::infinity()) : d;
}

}  // namespace visidim
