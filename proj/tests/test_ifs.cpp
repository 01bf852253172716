#include <doctest.h>

#include <cmath>
#include <set>

#include "visidim/dimension.hpp"
#include "visidim/error.hpp"
#include "visidim/ifs.hpp"
#include "visidim/scenarios.hpp"

using namespace visidim;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("spec was accepted: " << text);
  return ErrorKind::Io;
}

std::string one_map(const std::string& body) { return R"({"name":"t","maps":[)" + body + "]}"; }

}  // namespace

TEST_SUITE("ifs") {

TEST_CASE("spec validation") {
  CHECK(kind_of("{") == ErrorKind::Parse);
  CHECK(kind_of(R"({"name":"t","maps":[]})") == ErrorKind::EmptySystem);
  CHECK(kind_of(one_map(R"({"ratio":"1","angle_pi":"0","translate":["0","0"]})")) == ErrorKind::Validation);
  CHECK(kind_of(one_map(R"({"ratio":"-1/2","angle_pi":"0","translate":["0","0"]})")) == ErrorKind::Validation);
  CHECK(kind_of(one_map(R"({"ratio":0.5,"angle_pi":"0","translate":["0","0"]})")) == ErrorKind::Parse);
  CHECK(kind_of(one_map(R"({"angle_pi":"0","translate":["0","0"]})")) == ErrorKind::Parse);
  CHECK(kind_of(one_map(R"({"ratio":"1/2","translate":["0","0"],"fixed_point":["0","0"]})")) == ErrorKind::Validation);
  // Omitted angle, reflection and translation default to the identity parts.
  const IFSystem d = parse_spec(one_map(R"({"ratio":"1/2"})"));
  CHECK(d[0].ortho.is_identity());
  CHECK(*d[0].exact_translation == Vec2<QSqrt2>{});
  // Two half-size copies of the unit square that overlap in (0,1)^2.
  CHECK(kind_of(R"({"name":"t","maps":[
      {"ratio":"1/2","angle_pi":"0","translate":["0","0"]},
      {"ratio":"1/2","angle_pi":"0","translate":["1/4","0"]}],
      "open_set":{"x":["0","1"],"y":["0","1"]}})") == ErrorKind::OpenSetViolation);
}

TEST_CASE("fixed_point form matches translate form") {
  const IFSystem a = parse_spec(one_map(R"({"ratio":"1/5","angle_pi":"1/2","fixed_point":["1/2","1/2"]})"));
  const auto fp = a[0].fixed_point();
  CHECK(fp.x.contains(0.5));
  CHECK(fp.y.contains(0.5));
  // rot(pi/2)/5 fixing (1/2,1/2): t = c - r O c = (1/2 + 1/10, 1/2 - 1/10).
  REQUIRE(a[0].exact_translation);
  CHECK(a[0].exact_translation->x == QSqrt2(Rational(3, 5)));
  CHECK(a[0].exact_translation->y == QSqrt2(Rational(2, 5)));
}

TEST_CASE("ball contains every cylinder image") {
  for (const auto& name : scenario_names()) {
    const IFSystem f = resolve_spec(name);
    const Box2 ball = f.ball().bounding_box();
    for (const auto& e : cover_relative(f, Rational(1, 16)).entries) CHECK(ball.contains(e.box));
  }
}

TEST_CASE("cover is a maximal antichain at the scale") {
  for (const auto& name : scenario_names()) {
    const IFSystem f = resolve_spec(name);
    const Rational rel(1, 50);
    const CylinderCover cov = cover_relative(f, rel);
    std::set<Word> words;
    double mass = 0.0;
    const double s = moran_dimension(std::vector<Rational>{[&] {
      std::vector<Rational> r;
      for (const auto& m : f.maps()) r.push_back(m.ratio);
      return r;
    }()});
    for (const auto& e : cov.entries) {
      CHECK(e.map.ratio <= rel);
      Rational parent(1);
      for (std::size_t k = 0; k + 1 < e.word.size(); ++k) parent *= f[e.word[k]].ratio;
      CHECK(parent > rel);
      words.insert(e.word);
      mass += std::pow(e.map.ratio.get_d(), s);
    }
    // No word is a prefix of another.
    for (const auto& w : words) {
      for (std::size_t k = 1; k < w.size(); ++k) CHECK(words.count(Word(w.begin(), w.begin() + k)) == 0);
    }
    // sum r_u^s = 1 over any maximal antichain.
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("four-corner cover sizes are powers of four") {
  const IFSystem f = resolve_spec("fourcorner");
  for (int k = 0; k <= 5; ++k) {
    CHECK(cover_relative(f, Rational(1, static_cast<long>(std::pow(3, k)))).size() == (std::size_t{1} << (2 * k)));
    CHECK(cover(f, f.diameter() * std::pow(3.0, -k)).size() == (std::size_t{1} << (2 * k)));
  }
}

TEST_CASE("chaos game points lie in the cover") {
  for (const auto& name : scenario_names()) {
    const IFSystem f = resolve_spec(name);
    const CylinderCover cov = cover_relative(f, Rational(1, 20));
    for (const auto& p : chaos_game(f, 300, 42)) {
      bool inside = false;
      for (const auto& e : cov.entries) {
        if (e.box.x.lo() - 1e-9 <= p.x && p.x <= e.box.x.hi() + 1e-9 && e.box.y.lo() - 1e-9 <= p.y &&
            p.y <= e.box.y.hi() + 1e-9) {
          inside = true;
          break;
        }
      }
      CHECK(inside);
    }
  }
  // Same seed, same points.
  const IFSystem f = resolve_spec("ville");
  CHECK(chaos_game(f, 50, 3).front().x == chaos_game(f, 50, 3).front().x);
}

TEST_CASE("open set status") {
  CHECK(resolve_spec("meng").open_set_status() == OpenSetStatus::Verified);
  CHECK(parse_spec(one_map(R"({"ratio":"1/2","angle_pi":"0","translate":["0","0"]})")).open_set_status() ==
        OpenSetStatus::NotDeclared);
}

TEST_CASE("depth cap") {
  const IFSystem f = resolve_spec("fourcorner");
  try {
    cover_relative(f, Rational(1, 1000000), 5);
    FAIL("expected DepthCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthCapExceeded);
  }
}

}

TEST_SUITE("ifs") {

TEST_CASE("cube multiplicity stays bounded across scales") {
  for (const auto& name : scenario_names()) {
    const IFSystem f = resolve_spec(name);
    std::size_t first = 0;
    for (int k = 2; k <= 6; ++k) {
      const Rational rel(1, 1L << k);
      const std::size_t m = cube_multiplicity(cover_relative(f, rel), rel.get_d() * f.diameter());
      if (k == 2) first = m;
      CHECK(m >= 1);
      CHECK(m <= 4 * std::max<std::size_t>(first, 4));
    }
  }
}

TEST_CASE("cover cardinality grows by a bounded factor") {
  for (const auto& name : scenario_names()) {
    const IFSystem f = resolve_spec(name);
    const double rmax = f.max_ratio().get_d();
    const double bound = std::pow(static_cast<double>(f.size()), std::ceil(std::log(2.0) / std::log(1.0 / rmax)));
    for (int k = 2; k <= 7; ++k) {
      const double d = f.diameter() * std::ldexp(1.0, -k);
      const double ratio = static_cast<double>(cover(f, d / 2).size()) / static_cast<double>(cover(f, d).size());
      CHECK(ratio <= bound);
    }
  }
}

}
