#include <doctest.h>

#include <cmath>
#include <random>

#include "visidim/dimension.hpp"
#include "visidim/error.hpp"
#include "visidim/scenarios.hpp"

using namespace visidim;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("dimension") {

TEST_CASE("moran dimension") {
  const std::vector<Rational> four(4, Rational(1, 3));
  CHECK(std::abs(moran_dimension(four) - std::log(4.0) / std::log(3.0)) < 1e-12);
  CHECK(std::abs(moran_dimension(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}) - 1.0) < 1e-12);
  // Four halves fill the square.
  CHECK(std::abs(moran_dimension(std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}) - 2.0) < 1e-12);
  const std::vector<Rational> mixed{Rational(1, 2), Rational(1, 4)};
  const double s = moran_dimension(mixed);
  CHECK(std::abs(std::pow(0.5, s) + std::pow(0.25, s) - 1.0) < 1e-12);
  CHECK(kind_of([] { moran_dimension(std::vector<Rational>{}); }) == ErrorKind::EmptySystem);
  CHECK(kind_of([] { moran_dimension(std::vector<Rational>{Rational(1)}); }) == ErrorKind::NonContractive);
}

TEST_CASE("box fit recovers an exact power law") {
  std::vector<Sample> s;
  for (int k = 1; k <= 8; ++k) s.push_back({std::pow(2.0, -k), 5.0 * std::pow(2.0, 1.5 * k)});
  const auto r = fit_box_dimension(s);
  CHECK(r.slope == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(r.residual < 1e-10);
  CHECK(r.min_pair_slope == doctest::Approx(1.5));
  CHECK(kind_of([] { fit_box_dimension(std::vector<Sample>{{0.5, 2.0}}); }) == ErrorKind::InsufficientSamples);
  CHECK(kind_of([] { fit_box_dimension(std::vector<Sample>{{0.25, 2.0}, {0.5, 4.0}, {0.125, 8.0}}); }) == ErrorKind::Validation);
}

TEST_CASE("assouad estimate of a line and of a square") {
  std::vector<std::pair<std::int64_t, std::int64_t>> line, square;
  for (std::int64_t i = 0; i < 256; ++i) line.push_back({i, 0});
  for (std::int64_t i = 0; i < 64; ++i)
    for (std::int64_t j = 0; j < 64; ++j) square.push_back({i, j});
  const double res = 1.0 / 256;
  const std::vector<double> R{1.0 / 4, 1.0 / 8}, r{1.0 / 64};
  CHECK(assouad_estimate(line, res, R, r).slope == doctest::Approx(1.0).epsilon(0.02));
  CHECK(assouad_estimate(square, res, std::vector<double>{1.0 / 16}, r).slope == doctest::Approx(2.0).epsilon(0.02));
  CHECK(kind_of([&] { assouad_estimate(line, res, std::vector<double>{1.0 / 64}, r); }) == ErrorKind::ScaleOrder);
}

TEST_CASE("cell box counts halve a line") {
  std::vector<std::pair<std::int64_t, std::int64_t>> line;
  for (std::int64_t i = 0; i < 1024; ++i) line.push_back({i, 3});
  const std::vector<int> levels{0, 1, 2, 3};
  const auto s = cell_box_counts(line, 1.0 / 1024, levels);
  REQUIRE(s.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(s[k].count == 1024 >> k);
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius({2, 0, 0, 3}, 2) == doctest::Approx(3.0));
  CHECK(spectral_radius({0, 1, 1, 0}, 2) == doctest::Approx(1.0));  // periodic: plain power iteration would oscillate
  CHECK(spectral_radius({1, 1, 1, 0}, 2) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("perron dimension") {
  // One vertex, four loops at 1/3.
  WeightedDigraph g;
  g.vertices = 1;
  for (int i = 0; i < 4; ++i) g.edges.push_back({0, 0, Rational(1, 3)});
  CHECK(std::abs(perron_dimension(g) - std::log(4.0) / std::log(3.0)) < 1e-9);

  // Two vertices swapping with ratio 1/2 and a loop at 1/2 on each: M(s) = 2^-s [[1,1],[1,1]], root 2^(1-s) -> s = 1.
  WeightedDigraph h;
  h.vertices = 2;
  h.edges = {{0, 1, Rational(1, 2)}, {1, 0, Rational(1, 2)}, {0, 0, Rational(1, 2)}, {1, 1, Rational(1, 2)}};
  CHECK(std::abs(perron_dimension(h) - 1.0) < 1e-9);

  // Max over components: an isolated component with larger dimension wins.
  WeightedDigraph c = g;
  c.vertices = 2;
  for (int i = 0; i < 9; ++i) c.edges.push_back({1, 1, Rational(1, 3)});
  CHECK(std::abs(perron_dimension(c) - 2.0) < 1e-9);

  CHECK(kind_of([] { perron_dimension(WeightedDigraph{}); }) == ErrorKind::EmptyGraph);
}

TEST_CASE("projection digraphs of the examples have constant row sums") {
  for (const auto& name : scenario_names()) {
    const IFSystem f = resolve_spec(name);
    std::vector<Rational> ratios;
    for (const auto& m : f.maps()) ratios.push_back(m.ratio);
    const auto g = digraph_of(build_projection_graph(f, Direction::from_vector(2, 1)));
    CHECK(std::abs(perron_dimension(g) - moran_dimension(ratios)) < 1e-8);
  }
}

}

TEST_SUITE("dimension") {

TEST_CASE("moran dimension is monotone in the ratios") {
  std::vector<Rational> r{Rational(1, 3), Rational(1, 4), Rational(2, 7)};
  const double base = moran_dimension(r);
  auto more = r;
  more.push_back(Rational(1, 9));
  CHECK(moran_dimension(more) > base);
  auto smaller = r;
  for (auto& x : smaller) x *= Rational(9, 10);
  CHECK(moran_dimension(smaller) < base);
}

TEST_CASE("perron equals moran on one vertex for random ratio lists") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Rational> r;
    WeightedDigraph g;
    g.vertices = 1;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      // Numerators <= 2 over denominators >= 5 keep sum r^2 < 1, so s stays in [0, 2].
      Rational q(1 + static_cast<long>(rng() % 2), 5 + static_cast<long>(rng() % 10));
      q.canonicalize();
      r.push_back(q);
      g.edges.push_back({0, 0, q});
    }
    CHECK(std::abs(perron_dimension(g) - moran_dimension(r)) < 1e-8);
  }
}

TEST_CASE("two-cycle with single edges has dimension 0") {
  // M(s) = [[0, 2^-s], [2^-s, 0]] has spectral radius 2^-s, equal to 1 only at s = 0.
  WeightedDigraph g;
  g.vertices = 2;
  g.edges = {{0, 1, Rational(1, 2)}, {1, 0, Rational(1, 2)}};
  CHECK(perron_dimension(g) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("box slope ignores a constant count factor") {
  std::vector<Sample> a, b;
  for (int k = 1; k <= 6; ++k) {
    const double n = std::pow(3.0, k) + k;  // not an exact power law
    a.push_back({std::pow(2.0, -k), n});
    b.push_back({std::pow(2.0, -k), 7.0 * n});
  }
  CHECK(std::abs(fit_box_dimension(a).slope - fit_box_dimension(b).slope) < 1e-12);
}

TEST_CASE("four-corner cylinder counts give the similarity dimension") {
  const IFSystem f = resolve_spec("fourcorner");
  std::vector<Sample> s;
  for (int k = 4; k <= 8; ++k) {
    const double d = std::pow(3.0, -k);
    s.push_back({d, static_cast<double>(cover(f, d * f.diameter()).size())});
  }
  CHECK(std::abs(fit_box_dimension(s).slope - std::log(4.0) / std::log(3.0)) < 0.02);
}

TEST_CASE("assouad estimate of the full square at (1/4, 1/64)") {
  std::vector<std::pair<std::int64_t, std::int64_t>> square;
  for (std::int64_t i = 0; i < 256; ++i)
    for (std::int64_t j = 0; j < 256; ++j) square.push_back({i, j});
  const auto r = assouad_estimate(square, 1.0 / 256, std::vector<double>{0.25}, std::vector<double>{1.0 / 64});
  CHECK(r.slope >= 1.9);
  CHECK(r.notes.size() >= 1);
}

}
