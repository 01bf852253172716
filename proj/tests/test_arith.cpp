#include <doctest.h>

#include <cmath>
#include <random>

#include "visidim/interval.hpp"
#include "visidim/quadratic.hpp"
#include "visidim/rational.hpp"
#include "visidim/similarity.hpp"

using namespace visidim;

TEST_SUITE("arith") {

TEST_CASE("parse_rational reads fractions and decimals exactly") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("floor and floor_mod") {
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(floor_mod(Rational(7, 3), Rational(2)) == Rational(1, 3));
  CHECK(floor_mod(Rational(-1, 4), Rational(2)) == Rational(7, 4));
}

TEST_CASE("round_down and round_up bracket the rational") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational q(static_cast<long>(rng() % 100000) - 50000, static_cast<long>(rng() % 9999) + 1);
    const double lo = round_down(q), hi = round_up(q);
    CHECK(from_double(lo) <= q);
    CHECK(q <= from_double(hi));
    CHECK(std::nextafter(lo, INFINITY) >= hi);
  }
}

TEST_CASE("interval arithmetic encloses the exact result") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(rng), b = u(rng);
    const Rational qa = from_double(a), qb = from_double(b);
    CHECK((Interval(a) + Interval(b)).contains(Rational(qa + qb)));
    CHECK((Interval(a) - Interval(b)).contains(Rational(qa - qb)));
    CHECK((Interval(a) * Interval(b)).contains(Rational(qa * qb)));
    if (b != 0) CHECK((Interval(a) / Interval(b)).contains(Rational(qa / qb)));
  }
  // Representable results stay degenerate.
  CHECK((Interval(0.5) + Interval(0.25)).degenerate());
  CHECK((Interval(3.0) * Interval(0.125)).degenerate());
}

TEST_CASE("sqrt2 enclosure and trig tables") {
  const Interval& s = sqrt2_enclosure();
  CHECK(s.lo() * s.lo() <= 2.0);
  CHECK(s.hi() * s.hi() >= 2.0);
  CHECK(cos_pi(Rational(1, 2)) == Interval(0.0));
  CHECK(sin_pi(Rational(1)) == Interval(0.0));
  for (int k = 1; k < 24; ++k) {
    const double x = M_PI * k / 12.0;
    CHECK(std::abs(cos_pi(Rational(k, 12)).mid() - std::cos(x)) < 1e-14);
    CHECK(std::abs(sin_pi(Rational(k, 12)).mid() - std::sin(x)) < 1e-14);
  }
}

TEST_CASE("Q(sqrt 2) is a field and orders exactly") {
  const QSqrt2 a(Rational(1, 3), Rational(-2, 5));
  const QSqrt2 b(Rational(7, 2), Rational(1, 9));
  CHECK((a * b) / b == a);
  CHECK((a + b) - b == a);
  CHECK(QSqrt2::root_two() * QSqrt2::root_two() == QSqrt2(2));
  CHECK(QSqrt2(Rational(-141, 100), Rational(1)).sign() == 1);
  CHECK(QSqrt2(Rational(-142, 100), Rational(1)).sign() == -1);
  CHECK(QSqrt2(Rational(3), Rational(-2)).sign() == 1);  // 3 > 2 sqrt2
  CHECK(QSqrt2(Rational(17), Rational(-12)).sign() == 1);
  CHECK((a * b).enclosure().contains((a.enclosure() * b.enclosure()).mid()));
  CHECK(a < b);
}

TEST_CASE("orthogonal elements compose like matrices") {
  const OrthoElement r = OrthoElement::rotation(Rational(1, 4));
  const OrthoElement m = OrthoElement::reflection(Rational(1, 8));
  CHECK((r * r.inverse()).is_identity());
  CHECK((m * m).is_identity());
  CHECK((m * r).det() == -1);
  const Vec2<QSqrt2> v{QSqrt2(Rational(2)), QSqrt2(Rational(-1, 3))};
  const auto lhs = (r * m).apply(v);
  const auto rhs = r.apply(*m.apply(v));
  REQUIRE(lhs);
  REQUIRE(rhs);
  CHECK(*lhs == *rhs);
  CHECK_FALSE(OrthoElement::rotation(Rational(1, 3)).apply(v));
}

TEST_CASE("similarity composition agrees with sequential application") {
  const Similarity a = Similarity::make(Rational(1, 3), OrthoElement::rotation(Rational(1, 4)), {Rational(1), Rational(0)});
  const Similarity b = Similarity::make(Rational(1, 2), OrthoElement::reflection(Rational(1, 4)),
                                        {Rational(0), Rational(1, 5)});
  const Vec2<QSqrt2> p{QSqrt2(Rational(3, 7)), QSqrt2(Rational(-1, 2))};
  const auto direct = compose(a, b).apply(p);
  const auto seq = a.apply(*b.apply(p));
  REQUIRE(direct);
  REQUIRE(seq);
  CHECK(*direct == *seq);
  CHECK(compose(a, b).ratio == Rational(1, 6));

  const Similarity c = Similarity::with_fixed_point(Rational(1, 5), OrthoElement::rotation(Rational(1, 4)),
                                                    {Rational(1, 2), Rational(1, 2)});
  const auto fp = c.fixed_point();
  CHECK(fp.x.contains(0.5));
  CHECK(fp.y.contains(0.5));
}

TEST_CASE("image boxes contain images of sample points") {
  const Similarity s = Similarity::make(Rational(2, 7), OrthoElement::rotation(Rational(1, 6)), {Rational(1, 3), Rational(2)});
  const Box2 b{Interval(-1.0, 2.0), Interval(0.5, 1.5)};
  const Box2 img = image_box(s, b);
  for (double x : {-1.0, 0.0, 2.0}) {
    for (double y : {0.5, 1.0, 1.5}) {
      const auto q = s.apply(Vec2<Interval>{Interval(x), Interval(y)});
      CHECK(img.x.contains(q.x));
      CHECK(img.y.contains(q.y));
    }
  }
}

TEST_CASE("enclosing ball is invariant") {
  std::vector<Similarity> maps{
      Similarity::make(Rational(1, 3), OrthoElement(), {Rational(0), Rational(0)}),
      Similarity::make(Rational(1, 2), OrthoElement::rotation(Rational(1, 3)), {Rational(4), Rational(1)})};
  const Ball ball = enclosing_ball(maps);
  for (const auto& f : maps) {
    const auto c = f.apply(Vec2<Interval>{Interval(ball.center.x), Interval(ball.center.y)});
    const Interval d = sqrt(square(c.x - Interval(ball.center.x)) + square(c.y - Interval(ball.center.y)));
    CHECK(d.hi() + f.ratio.get_d() * ball.radius <= ball.radius * (1 + 1e-12));
  }
}

}
