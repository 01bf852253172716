#include <doctest.h>

#include <set>

#include "visidim/error.hpp"
#include "visidim/rotation_group.hpp"

using namespace visidim;

namespace {

// Independent closure: orbit words in the generators until nothing new appears.
std::set<OrthoElement> brute_closure(const std::vector<OrthoElement>& gens) {
  std::set<OrthoElement> seen{OrthoElement::identity()};
  std::vector<OrthoElement> frontier{OrthoElement::identity()};
  while (!frontier.empty()) {
    std::vector<OrthoElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        const OrthoElement y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

void check_axioms(const RotationGroup& g) {
  const std::size_t n = g.size();
  CHECK(g[0].is_identity());
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(g.product(a, g.inverse(a)) == 0);
    for (std::size_t b = 0; b < n; ++b) {
      CHECK(g[g.product(a, b)] == g[a] * g[b]);
    }
  }
  for (std::size_t a = 0; a < n; a += 3) {
    for (std::size_t b = 0; b < n; b += 2) {
      for (std::size_t c = 0; c < n; ++c) {
        CHECK(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
      }
    }
  }
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("cyclic and dihedral closures match brute force") {
  const std::vector<std::vector<OrthoElement>> cases{
      {},
      {OrthoElement::rotation(Rational(1, 2))},
      {OrthoElement::rotation(Rational(1, 4))},
      {OrthoElement::rotation(Rational(2, 3)), OrthoElement::rotation(Rational(1, 2))},
      {OrthoElement::reflection(Rational(0))},
      {OrthoElement::rotation(Rational(1, 3)), OrthoElement::reflection(Rational(1, 5))},
      {OrthoElement::reflection(Rational(1, 7)), OrthoElement::reflection(Rational(2, 7))},
  };
  const std::size_t orders[] = {1, 4, 8, 12, 2, 12, 14};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const RotationGroup g = RotationGroup::closure(cases[i]);
    const auto brute = brute_closure(cases[i]);
    CHECK(g.size() == orders[i]);
    CHECK(g.size() == brute.size());
    for (const auto& e : g.elements()) CHECK(brute.count(e) == 1);
    check_axioms(g);
  }
}

TEST_CASE("elements are sorted with identity first") {
  const RotationGroup g = RotationGroup::closure(std::vector{OrthoElement::rotation(Rational(1, 3)),
                                                             OrthoElement::reflection(Rational(0))});
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);
  CHECK(g.index_of(OrthoElement::rotation(Rational(2, 3))).has_value());
  CHECK_FALSE(g.index_of(OrthoElement::rotation(Rational(1, 2))).has_value());
}

TEST_CASE("group cap is enforced") {
  try {
    RotationGroup::closure(std::vector{OrthoElement::rotation(Rational(1, 5000))});
    FAIL("expected GroupCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupCapExceeded);
  }
}

TEST_CASE("quarter exactness") {
  CHECK(RotationGroup::closure(std::vector{OrthoElement::rotation(Rational(1, 4))}).quarter_exact());
  CHECK_FALSE(RotationGroup::closure(std::vector{OrthoElement::rotation(Rational(1, 3))}).quarter_exact());
}

TEST_CASE("directions: parsing, equality and orbits") {
  const Direction a = Direction::parse("2,1");
  const Direction b = Direction::from_vector(4, 2);
  CHECK_FALSE(a.same_as(b));  // different bases are different vectors
  CHECK(a.same_as(Direction::from_vector(2, 1)));
  const Direction q = Direction::parse("1/4pi");
  const auto v = q.exact_vector();
  REQUIRE(v);
  CHECK(v->x == v->y);
  CHECK(Direction::parse("1/2 pi").same_as(Direction::from_vector(0, 1)));
  CHECK(Direction::from_vector(1, 0).perpendicular().same_as(Direction::from_vector(0, 1)));
  CHECK(Direction::from_vector(3, -1).opposite().same_as(Direction::from_vector(-3, 1)));

  const RotationGroup g = RotationGroup::closure(std::vector{OrthoElement::rotation(Rational(1, 2))});
  CHECK(orbit(g, Direction::from_vector(2, 1)).size() == 4);
  const RotationGroup h = RotationGroup::closure(std::vector{OrthoElement::reflection(Rational(0))});
  CHECK(orbit(h, Direction::from_vector(1, 0)).size() == 1);  // fixed by the reflection
  CHECK(orbit(h, Direction::from_vector(1, 1)).size() == 2);
  CHECK_THROWS(Direction::parse("0,0"));
}

}
