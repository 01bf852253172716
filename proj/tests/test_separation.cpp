#include <doctest.h>

#include <cmath>
#include <map>

#include "visidim/error.hpp"
#include "visidim/scenarios.hpp"
#include "visidim/separation.hpp"

using namespace visidim;

namespace {

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Orbit of p/q under x -> n x mod 1 by integer residues.
std::pair<std::vector<long>, std::size_t> brute_orbit(long n, long p, long q) {
  std::map<long, std::size_t> seen;
  std::vector<long> out;
  long x = p % q;
  while (!seen.count(x)) {
    seen[x] = out.size();
    out.push_back(x);
    x = (x * n) % q;
  }
  return {out, seen[x]};
}

}  // namespace

TEST_SUITE("separation") {

TEST_CASE("rational orbits match integer iteration") {
  for (long n : {2L, 3L, 5L, 7L}) {
    for (long q = 1; q <= 40; ++q) {
      for (long p = 0; p < q; ++p) {
        const auto o = rational_orbit(n, frac(p, q));
        const auto [res, start] = brute_orbit(n, p, q);
        REQUIRE(o.size() == res.size());
        CHECK(o.cycle_start == start);
        for (std::size_t i = 0; i < res.size(); ++i) CHECK(o.elements[i] == frac(res[i], q));
      }
    }
  }
  CHECK(rational_orbit(2, Rational(1, 3)).cycle().size() == 2);
  CHECK(rational_orbit(2, Rational(1, 4)).cycle_start == 2);  // 1/4 -> 1/2 -> 0 -> 0
  CHECK_THROWS_AS(rational_orbit(1, Rational(1, 3)), Error);
  CHECK_THROWS_AS(rational_orbit(2, Rational(3, 2)), Error);
  try {
    rational_orbit(2, M_SQRT2 - 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrationalInput);
  }
}

TEST_CASE("dyadic system has no coincidences and gap 2^-n") {
  AffineLineSystem s;
  s.maps = {LineAffine::exact(Rational(1, 2), Rational(0)), LineAffine::exact(Rational(1, 2), Rational(1, 2))};
  const WscReport r = wsc_scan(s, 8);
  CHECK(r.verdict == WscVerdict::NoViolationToDepth);
  CHECK(r.coincidences == 0);
  REQUIRE(r.min_gap.size() == 8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(r.min_gap[n - 1] == std::ldexp(1.0, -n));
    CHECK(r.normalized[n - 1] == doctest::Approx(1.0));
  }
}

TEST_CASE("overlapping rational system only has exact overlaps") {
  // x/3, x/3 + 1/3, x/3 + 2/3, x/3 + 1/3 repeated: every level has coincidences.
  AffineLineSystem s;
  for (int t : {0, 1, 2, 1}) s.maps.push_back(LineAffine::exact(Rational(1, 3), frac(t, 3)));
  const WscReport r = wsc_scan(s, 6);
  CHECK(r.coincidences > 0);
  CHECK(r.verdict == WscVerdict::ExactOverlapsOnly);
  for (double q : r.normalized) CHECK(q >= 1.0 - 1e-12);
}

TEST_CASE("irrational offset suggests accumulation") {
  AffineLineSystem s;
  s.maps = {LineAffine::exact(Rational(1, 2), Rational(0)), LineAffine::exact(Rational(1, 2), Rational(1, 2)),
            LineAffine::approximate(Rational(1, 2), (M_SQRT2 - 1) / 2)};
  const WscReport r = wsc_scan(s, 12);
  CHECK_FALSE(s.exact());
  CHECK(r.verdict == WscVerdict::SuspectedAccumulation);
}

TEST_CASE("projected integral system sits on a lattice") {
  const IFSystem f = resolve_spec("integral");
  const AffineLineSystem s = project_system(f, Direction::from_vector(1, 1));
  REQUIRE(s.exact());
  for (const auto& m : s.maps) {
    CHECK(m.ratio == Rational(1, 2));
    // Offsets <t, (-1,1)> with t in {0, 1/2}^2.
    CHECK(Rational(*m.exact_offset * 2).get_den() == 1);
  }
  CHECK(wsc_scan(s, 10).verdict != WscVerdict::SuspectedAccumulation);
  CHECK_THROWS_AS(project_system(resolve_spec("ville"), Direction::from_vector(1, 0)), Error);
}

}
