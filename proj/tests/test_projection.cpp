#include <doctest.h>

#include <random>

#include "visidim/error.hpp"
#include "visidim/projection.hpp"
#include "visidim/scenarios.hpp"

using namespace visidim;

namespace {

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

QSqrt2 coord(const Vec2<QSqrt2>& x, const Direction& d) {
  const auto v = d.exact_vector();
  REQUIRE(v);
  return dot(x, perp(*v));
}

double coord(const Vec2<double>& x, const Direction& d) {
  const auto v = d.vector();
  return x.x * -v.y.mid() + x.y * v.x.mid();
}

const std::vector<std::pair<std::string, std::string>> kCases{
    {"meng", "1,0"}, {"meng", "1/4pi"}, {"meng", "2,1"}, {"fourcorner", "2,1"}, {"fourcorner", "1,0"},
    {"ville", "0,-1"}, {"ville", "3,1"}, {"integral", "1,1"}, {"integral", "1,2"}};

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("edges satisfy O_i(d_to) = d_from and the exact line relation") {
  std::mt19937_64 rng(5);
  for (const auto& [name, th] : kCases) {
    const IFSystem f = resolve_spec(name);
    const ProjectionGraph g = build_projection_graph(f, Direction::parse(th));
    REQUIRE(g.edges.size() == g.size() * f.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        const LineMap& e = g.edge(v, i);
        CHECK(e.from == v);
        CHECK(e.source == i);
        CHECK(g.vertices[e.to].transformed(f[i].ortho).same_as(g.vertices[v]));
        CHECK(e.ratio == f[i].ratio);
        REQUIRE(e.exact_offset);
        for (int t = 0; t < 4; ++t) {
          const Vec2<QSqrt2> x{QSqrt2(frac(static_cast<long>(rng() % 41) - 20, 7)),
                               QSqrt2(frac(static_cast<long>(rng() % 41) - 20, 9))};
          const QSqrt2 lhs = coord(*f[i].apply(x), g.vertices[v]);
          const QSqrt2 rhs = QSqrt2(e.ratio * e.sign) * coord(x, g.vertices[e.to]) + *e.exact_offset;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("hull is the exact support interval") {
  const IFSystem f = resolve_spec("fourcorner");
  const ProjectionGraph g = build_projection_graph(f, Direction::from_vector(1, 0));
  // d = (1,0): coordinate <x, (0,1)> = y, hull [0,1].
  CHECK(*g.exact_hull_lo(0) == QSqrt2(0));
  CHECK(*g.exact_hull_hi(0) == QSqrt2(1));
  const ProjectionGraph d = build_projection_graph(f, Direction::from_vector(2, 1));
  // <x, (-1,2)> over the unit square: [-1, 2].
  CHECK(*d.exact_hull_lo(0) == QSqrt2(-1));
  CHECK(*d.exact_hull_hi(0) == QSqrt2(2));
}

TEST_CASE("outer components contain the projection of sampled points") {
  for (const auto& [name, th] : kCases) {
    const IFSystem f = resolve_spec(name);
    const ProjectionGraph g = build_projection_graph(f, Direction::parse(th));
    const Classification c = classify_projection(g, 0, 8);
    for (const auto& p : chaos_game(f, 400, 9)) {
      const double t = coord(p, g.vertices[0]);
      bool in = false;
      for (const auto& s : c.components) in = in || (s.lo - 1e-9 <= t && t <= s.hi + 1e-9);
      CHECK(in);
    }
  }
}

TEST_CASE("outer approximations are nested in depth and inner ones grow") {
  for (const auto& [name, th] : kCases) {
    const IFSystem f = resolve_spec(name);
    const ProjectionGraph g = build_projection_graph(f, Direction::parse(th));
    Classification prev = classify_projection(g, 0, 1);
    for (int d = 2; d <= 7; ++d) {
      const Classification cur = classify_projection(g, 0, d);
      if (cur.depth == prev.depth) break;  // stopped early
      const IntervalUnion<double> before(prev.components);
      for (const auto& s : cur.components) {
        CHECK(before.covers(Segment<double>{s.lo + 1e-12, s.hi - 1e-12}));
      }
      const IntervalUnion<double> inner(cur.inner);
      for (const auto& s : prev.inner) CHECK(inner.covers(s));
      prev = cur;
    }
  }
}

TEST_CASE("inner approximation lies inside the outer one") {
  for (const auto& [name, th] : kCases) {
    const IFSystem f = resolve_spec(name);
    const auto cls = classify_all(build_projection_graph(f, Direction::parse(th)), 8);
    for (const auto& c : cls) {
      const IntervalUnion<double> outer(c.components);
      for (const auto& s : c.inner) CHECK(outer.covers(s));
      CHECK(c.resolved.size() == c.components.size());
      if (c.verdict == Verdict::FiniteUnion) CHECK(c.count == c.resolved_count());
    }
  }
}

TEST_CASE("four-corner counts double with each third of the slope") {
  const IFSystem f = resolve_spec("fourcorner");
  long tan = 2;
  for (std::size_t k = 0; k < 5; ++k, tan *= 3) {
    const auto c = classify_all(build_projection_graph(f, Direction::from_vector(tan, 1)), 12).front();
    CHECK(c.verdict == Verdict::FiniteUnion);
    CHECK(c.certified);
    CHECK(c.count == (std::size_t{1} << k));
    CHECK(c.exact);
  }
  // tan a = 1: the projection is a single interval as well.
  CHECK(classify_all(build_projection_graph(f, Direction::from_vector(1, 1)), 12).front().count == 1);
}

TEST_CASE("interval union merges touching parts") {
  IntervalUnion<int> u(std::vector<Segment<int>>{{5, 6}, {0, 2}, {2, 3}, {8, 9}});
  REQUIRE(u.size() == 3);
  CHECK(u.components()[0] == Segment<int>{0, 3});
  CHECK(u.covers(Segment<int>{1, 3}));
  CHECK_FALSE(u.covers(Segment<int>{3, 5}));
  CHECK(u.gaps().size() == 2);
}

TEST_CASE("penetrable cover keeps a subset") {
  const IFSystem f = resolve_spec("fourcorner");
  const ProjectionGraph g = build_projection_graph(f, Direction::from_vector(2, 1));
  const Classification root = classify_all(g, 12).front();
  const CylinderCover cov = cover_relative(f, Rational(1, 81));
  const PenetrableCover pen = penetrable_cover(f, g, root, cov);
  CHECK(pen.total == cov.size());
  CHECK(pen.size() < cov.size());
  // Every dropped cylinder projects strictly inside the interval (-1, 2).
  for (const auto& e : cov.entries) {
    const ProjectedHull h = projected_hull(g, e.map);
    const bool kept = std::any_of(pen.entries.begin(), pen.entries.end(), [&](const CoverEntry& p) { return p.word == e.word; });
    const bool interior = *h.exact_lo > QSqrt2(-1) && *h.exact_hi < QSqrt2(2);
    CHECK(kept == !interior);
  }
}

TEST_CASE("to_json carries the verdict") {
  const IFSystem f = resolve_spec("ville");
  const auto c = classify_all(build_projection_graph(f, Direction::from_vector(1, 0)), 6).front();
  const auto j = to_json(c);
  CHECK(j["verdict"] == "FiniteUnion");
  CHECK(j.contains("components"));
}

}
