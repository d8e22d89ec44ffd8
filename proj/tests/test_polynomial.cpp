#include "doctest.h"

#include "ap/polynomial.hpp"

using namespace ap;

TEST_CASE("parse and print round-trip") {
  auto p = parse_poly("x^2-x-1");
  CHECK(p.degree() == 2);
  CHECK(p.c[0] == -1);
  CHECK(p.c[1] == -1);
  CHECK(p.c[2] == 1);
  CHECK(poly_to_string(p) == "x^2-x-1");
  CHECK(parse_poly(poly_to_string(p)) == p);

  auto q = parse_poly("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");
  CHECK(q.degree() == 10);
  CHECK(q.monic());
  CHECK(parse_poly(poly_to_string(q)) == q);

  CHECK(parse_poly("2x^3+5").c[3] == 2);
  CHECK(parse_poly("-x+2").c[1] == -1);
  CHECK_THROWS_AS(parse_poly("x^2 + + 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x^2 - y"), std::invalid_argument);
}

TEST_CASE("arithmetic basics") {
  auto p = parse_poly("x^2-x-1");
  auto q = parse_poly("x-2");
  CHECK(poly_to_string(p * q) == "x^3-3x^2+x+2");
  CHECK((p + q).degree() == 2);
  CHECK(derivative(p) == parse_poly("2x-1"));
  CHECK(p.eval(Rational(2)) == Rational(1));
}

TEST_CASE("taylor shift") {
  auto p = parse_poly("x^2-x-1");
  // p(x+3) = x^2 + 5x + 5
  CHECK(shift_poly(p, 3) == parse_poly("x^2+5x+5"));
  CHECK(shift_poly(p, 0) == p);
  auto r = parse_poly("x^3");
  CHECK(shift_poly(r, -1) == parse_poly("x^3-3x^2+3x-1"));
}

TEST_CASE("gcd and squarefree decomposition") {
  auto p = parse_poly("x^2-1");
  auto q = parse_poly("x^2-2x+1");
  auto g = gcd(to_qpoly(p), to_qpoly(q));
  CHECK(g.degree() == 1);
  CHECK(primitive_part(g) == parse_poly("x-1"));

  // (x-1)^2 (x+2)
  auto f = parse_poly("x-1") * parse_poly("x-1") * parse_poly("x+2");
  auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == parse_poly("x+2"));
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == parse_poly("x-1"));
  CHECK(dec[1].second == 2);
  CHECK(squarefree_part(f) == parse_poly("x+2") * parse_poly("x-1"));
}

TEST_CASE("resultant") {
  // res(x^2-2, x^2-3) = (2-3)^2 = 1
  CHECK(resultant(parse_poly("x^2-2"), parse_poly("x^2-3")) == 1);
  // res(x-a, p) = p(a)
  CHECK(resultant(parse_poly("x-3"), parse_poly("x^2-x-1")) == 5);
  // shared root -> 0
  CHECK(resultant(parse_poly("x^2-1"), parse_poly("x-1")) == 0);
  // res(f,g) = lc(f)^deg(g) * prod g(roots of f): res(x^2-2, x^3) = (sqrt2 * -sqrt2)^3 = -8
  CHECK(resultant(parse_poly("x^2-2"), parse_poly("x^3")) == -8);
}

TEST_CASE("self-reciprocal reduction") {
  // x^4 - x^3 - x^2 - x + 1 = x^2 * q(x + 1/x), q(w) = w^2 - w - 3
  auto p = parse_poly("x^4-x^3-x^2-x+1");
  CHECK(reverse_poly(p) == p);
  CHECK(self_reciprocal_reduce(p) == parse_poly("x^2-x-3"));
  // x^2+1 -> q(w) = w
  CHECK(self_reciprocal_reduce(parse_poly("x^2+1")) == parse_poly("x"));
}

TEST_CASE("interval evaluation encloses values") {
  auto p = parse_poly("x^3-2x+1");
  QInterval iv{Rational(1, 2), Rational(3, 4)};
  auto e = eval_interval(p, iv);
  for (int k = 0; k <= 4; ++k) {
    Rational x = iv.lo + Rational(k, 4) * (iv.hi - iv.lo);
    Rational v = to_qpoly(p).eval(x);
    CHECK(e.lo <= v);
    CHECK(v <= e.hi);
  }
}

TEST_CASE("rational helpers") {
  CHECK(floor_rat(Rational(7, 2)) == 3);
  CHECK(floor_rat(Rational(-7, 2)) == -4);
  CHECK(ceil_rat(Rational(7, 2)) == 4);
  CHECK(round_rat(Rational(5, 3)) == 2);
  CHECK(round_rat(Rational(-5, 3)) == -2);
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.25) == Rational(-13, 4));
  auto s = sqrt_enclosure(Rational(2), Rational(1, 1000000));
  CHECK(s.lo * s.lo <= 2);
  CHECK(s.hi * s.hi >= 2);
  CHECK(s.width() <= Rational(1, 1000000));
}
