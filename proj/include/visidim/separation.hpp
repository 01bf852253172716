#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "visidim/ifs.hpp"

namespace visidim {

/// x -> ratio * sign * x + offset. The offset is exact when known, otherwise
/// only its binary64 value is used.
struct LineAffine {
  Rational ratio;
  int sign = 1;
  std::optional<Rational> exact_offset;
  double offset = 0.0;

  static LineAffine exact(Rational ratio, Rational offset, int sign = 1);
  static LineAffine approximate(Rational ratio, double offset, int sign = 1);
};

struct AffineLineSystem {
  std::vector<LineAffine> maps;

  bool exact() const;
};

/// {P_theta o f_i}; requires a trivial rotation group.
AffineLineSystem project_system(const IFSystem& ifs, const Direction& theta);

enum class WscVerdict { NoViolationToDepth, ExactOverlapsOnly, SuspectedAccumulation };
std::string_view to_string(WscVerdict v);

inline constexpr int kMaxWscDepth = 12;

struct WscReport {
  int depth = 0;
  std::size_t coincidences = 0;      ///< pairs u != v with f_u = f_v, summed over levels
  std::vector<double> min_gap;       ///< per level 1..depth: smallest nonzero offset gap within a bucket
  std::vector<double> min_distance;  ///< per level: cumulative minimal nonzero identity distance
  std::vector<double> normalized;    ///< min_gap / r_min^n
  WscVerdict verdict = WscVerdict::NoViolationToDepth;
};

/// Enumerates f_u for |u| <= depth, bucketed by (ratio, sign), with
/// multiplicities. SuspectedAccumulation when the normalized gaps fall
/// strictly over the last three levels and end below half their value at
/// depth/2.
WscReport wsc_scan(const AffineLineSystem& sys, int depth);

struct RationalOrbit {
  std::vector<Rational> elements;  ///< first visit order
  std::size_t cycle_start = 0;     ///< elements[cycle_start..] is the cycle

  std::size_t size() const { return elements.size(); }
  std::vector<Rational> cycle() const {
    return {elements.begin() + static_cast<std::ptrdiff_t>(cycle_start), elements.end()};
  }
};

/// Orbit of theta under x -> n x mod 1.
RationalOrbit rational_orbit(long n, const Rational& theta);
/// Binary64 input is not an exact rational: always IrrationalInput.
[[noreturn]] RationalOrbit rational_orbit(long n, double theta);

nlohmann::json to_json(const WscReport& r);
nlohmann::json to_json(const RationalOrbit& o);

}  // namespace visidim
