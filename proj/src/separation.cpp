#include "visidim/separation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "visidim/error.hpp"
#include "visidim/projection.hpp"

namespace visidim {

LineAffine LineAffine::exact(Rational ratio, Rational offset, int sign) {
  LineAffine m;
  m.ratio = std::move(ratio);
  m.sign = sign;
  m.offset = offset.get_d();
  m.exact_offset = std::move(offset);
  return m;
}

LineAffine LineAffine::approximate(Rational ratio, double offset, int sign) {
  LineAffine m;
  m.ratio = std::move(ratio);
  m.sign = sign;
  m.offset = offset;
  return m;
}

bool AffineLineSystem::exact() const {
  return std::all_of(maps.begin(), maps.end(), [](const LineAffine& m) { return m.exact_offset.has_value(); });
}

AffineLineSystem project_system(const IFSystem& ifs, const Direction& theta) {
  const ProjectionGraph g = build_projection_graph(ifs, theta);
  if (g.size() != 1) {
    throw Error(ErrorKind::Validation, "projected system needs a direction fixed by the rotation group");
  }
  AffineLineSystem sys;
  for (std::size_t i = 0; i < g.maps; ++i) {
    const LineMap& e = g.edge(0, i);
    if (e.exact_offset && e.exact_offset->is_rational()) {
      sys.maps.push_back(LineAffine::exact(e.ratio, e.exact_offset->rational_part(), e.sign));
    } else {
      sys.maps.push_back(LineAffine::approximate(e.ratio, e.offset.mid(), e.sign));
    }
  }
  return sys;
}

std::string_view to_string(WscVerdict v) {
  switch (v) {
    case WscVerdict::NoViolationToDepth: return "NoViolationToDepth";
    case WscVerdict::ExactOverlapsOnly: return "ExactOverlapsOnly";
    case WscVerdict::SuspectedAccumulation: return "SuspectedAccumulation";
  }
  return "?";
}

namespace {

// Offsets of one (ratio, sign) bucket with multiplicities.
template <class T>
using Bucket = std::map<T, std::size_t>;

template <class T>
double to_double(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return v.get_d();
  } else {
    return v;
  }
}

template <class T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return q.get_d();
  }
}

template <class T>
T offset_of(const LineAffine& m) {
  if constexpr (std::is_same_v<T, Rational>) {
    return *m.exact_offset;
  } else {
    return m.offset;
  }
}

template <class T>
WscReport scan(const AffineLineSystem& sys, int depth) {
  using Key = std::pair<Rational, int>;
  WscReport rep;
  rep.depth = depth;
  Rational rmin = sys.maps.front().ratio;
  for (const auto& m : sys.maps) rmin = std::min(rmin, m.ratio);
  const double log_rmin = std::log(rmin.get_d());

  std::map<Key, Bucket<T>> level{{{Rational(1), 1}, {{T(0), std::size_t{1}}}}};
  double cumulative = INFINITY;
  for (int n = 1; n <= depth; ++n) {
    std::map<Key, Bucket<T>> next;
    // f_u o f_i: ratio r_u r_i, sign s_u s_i, offset t_u + s_u r_u t_i.
    for (const auto& [key, bucket] : level) {
      const auto& [ru, su] = key;
      for (const auto& m : sys.maps) {
        auto& out = next[{Rational(ru * m.ratio), su * m.sign}];
        const T shift = from_rational<T>(ru) * offset_of<T>(m) * T(su);
        for (const auto& [t, mult] : bucket) out[T(t + shift)] += mult;
      }
    }
    level = std::move(next);

    double gap = INFINITY;
    for (const auto& [key, bucket] : level) {
      const T* prev = nullptr;
      for (const auto& [t, mult] : bucket) {
        rep.coincidences += mult * (mult - 1) / 2;
        if (prev) gap = std::min(gap, std::abs(to_double<T>(T(t - *prev))));
        prev = &t;
      }
    }
    // Identity distance across buckets of equal sign.
    double dist = gap;
    for (auto a = level.begin(); a != level.end(); ++a) {
      for (auto b = std::next(a); b != level.end(); ++b) {
        if (a->first.second != b->first.second) continue;
        const double lq = std::abs(std::log(Rational(a->first.first / b->first.first).get_d()));
        if (lq >= dist) continue;
        auto i = a->second.begin();
        auto j = b->second.begin();
        double best = INFINITY;
        while (i != a->second.end() && j != b->second.end()) {
          best = std::min(best, std::abs(to_double<T>(T(i->first - j->first))));
          if (i->first < j->first) ++i;
          else ++j;
        }
        dist = std::min(dist, lq + best);
      }
    }
    cumulative = std::min(cumulative, dist);
    rep.min_gap.push_back(gap);
    rep.min_distance.push_back(cumulative);
    rep.normalized.push_back(std::isfinite(gap) ? gap / std::exp(n * log_rmin) : INFINITY);
  }

  const auto& q = rep.normalized;
  const std::size_t k = q.size();
  bool decaying = false;
  if (k >= 3 && std::isfinite(q[k - 3])) {
    const double mid = q[std::max<std::size_t>(0, k / 2 - 1)];
    decaying = q[k - 1] < q[k - 2] && q[k - 2] < q[k - 3] && q[k - 1] < 0.5 * mid;
  }
  if (decaying) rep.verdict = WscVerdict::SuspectedAccumulation;
  else if (rep.coincidences > 0) rep.verdict = WscVerdict::ExactOverlapsOnly;
  else rep.verdict = WscVerdict::NoViolationToDepth;
  return rep;
}

}  // namespace

WscReport wsc_scan(const AffineLineSystem& sys, int depth) {
  if (sys.maps.empty()) throw Error(ErrorKind::EmptySystem, "no maps");
  if (depth < 1 || depth > kMaxWscDepth) throw Error(ErrorKind::DepthCapExceeded, "scan depth must lie in [1, 12]");
  for (const auto& m : sys.maps) {
    if (m.ratio <= 0 || m.ratio >= 1) throw Error(ErrorKind::NonContractive, "ratio not in (0,1)");
  }
  return sys.exact() ? scan<Rational>(sys, depth) : scan<double>(sys, depth);
}

RationalOrbit rational_orbit(long n, const Rational& theta) {
  if (n < 2) throw Error(ErrorKind::Validation, "multiplier must be at least 2");
  if (theta < 0 || theta >= 1) throw Error(ErrorKind::Validation, "theta must lie in [0,1)");
  RationalOrbit orbit;
  std::map<Rational, std::size_t> seen;
  Rational x = theta;
  x.canonicalize();
  while (!seen.count(x)) {
    seen.emplace(x, orbit.elements.size());
    orbit.elements.push_back(x);
    x = floor_mod(Rational(x * n), Rational(1));
  }
  orbit.cycle_start = seen.at(x);
  return orbit;
}

RationalOrbit rational_orbit(long, double) {
  throw Error(ErrorKind::IrrationalInput, "orbit needs an exact rational; pass \"p/q\"");
}

nlohmann::json to_json(const WscReport& r) {
  nlohmann::json j;
  j["depth"] = r.depth;
  j["coincidences"] = r.coincidences;
  j["min_gap"] = r.min_gap;
  j["min_distance"] = r.min_distance;
  j["normalized_gap"] = r.normalized;
  j["verdict"] = to_string(r.verdict);
  return j;
}

nlohmann::json to_json(const RationalOrbit& o) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : o.elements) j.push_back(to_string(x));
  return j;
}

}  // namespace visidim
