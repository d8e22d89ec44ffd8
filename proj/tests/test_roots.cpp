#include "doctest.h"

#include "ap/root_isolation.hpp"
#include "oracles/sturm_oracle.hpp"

using namespace ap;

namespace {
const Rational kPrec(1, Int(1) << 40);  // ~1e-12

double mid_re(const RootEnclosure& r) { return r.approx_re(); }
}  // namespace

TEST_CASE("linear polynomial root is exact") {
  auto roots = isolate_roots(parse_poly("x-2"), kPrec);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].real);
  CHECK(roots[0].box.re.lo == 2);
  CHECK(roots[0].box.re.hi == 2);
}

TEST_CASE("golden ratio polynomial") {
  // Expected enclosures frozen from the Sturm bisection oracle.
  auto expect = oracle::real_roots(parse_poly("x^2-x-1"), Rational(1, 100000));
  REQUIRE(expect.size() == 2);
  CHECK(to_double(expect[0].mid()) == doctest::Approx(-0.6180339887).epsilon(1e-4));
  CHECK(to_double(expect[1].mid()) == doctest::Approx(1.6180339887).epsilon(1e-4));

  auto roots = isolate_roots(parse_poly("x^2-x-1"), kPrec);
  REQUIRE(roots.size() == 2);
  for (auto& r : roots) CHECK(r.real);
  CHECK(roots[0].box.re.intersects(expect[0]));
  CHECK(roots[1].box.re.intersects(expect[1]));
  CHECK(roots[0].box.width() <= kPrec);
}

TEST_CASE("salem quartic has two real and two complex roots") {
  auto p = parse_poly("x^4-x^3-x^2-x+1");
  auto expect = oracle::real_roots(p, Rational(1, 1 << 20));
  REQUIRE(expect.size() == 2);
  CHECK(to_double(expect[1].mid()) == doctest::Approx(1.7220838).epsilon(1e-5));
  CHECK(to_double(expect[0].mid()) == doctest::Approx(0.5806884).epsilon(1e-5));

  auto roots = isolate_roots(p, kPrec);
  REQUIRE(roots.size() == 4);
  int reals = 0, complexes = 0;
  for (auto& r : roots) {
    if (r.real) ++reals;
    else ++complexes;
  }
  CHECK(reals == 2);
  CHECK(complexes == 2);
  // The complex pair lies on the unit circle: |z|^2 enclosure straddles 1.
  for (auto& r : roots) {
    if (r.real) continue;
    auto a2 = r.box.abs2();
    CHECK(a2.lo <= 1);
    CHECK(a2.hi >= 1);
  }
}

TEST_CASE("multiplicities via square-free decomposition") {
  // (x-1)^2 (x^2-2)
  auto p = parse_poly("x-1") * parse_poly("x-1") * parse_poly("x^2-2");
  auto roots = isolate_roots(p, kPrec);
  REQUIRE(roots.size() == 3);
  int with_mult2 = 0;
  for (auto& r : roots)
    if (r.multiplicity == 2) {
      ++with_mult2;
      CHECK(r.box.re.contains(Rational(1)));
    }
  CHECK(with_mult2 == 1);
  CHECK(roots[0].box.re.hi < roots[1].box.re.lo);
  CHECK(roots[1].box.re.hi < roots[2].box.re.lo);
}

TEST_CASE("canonical order sorts by real then imaginary part") {
  // x^3 + x = x (x^2+1): roots -i, 0, i share the real part 0.
  auto roots = isolate_roots(parse_poly("x^3+x"), kPrec);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].approx_im() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(roots[1].real);
  CHECK(roots[1].box.re.lo == 0);
  CHECK(roots[2].approx_im() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degree ten stress: Lehmer's polynomial") {
  auto p = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  auto roots = isolate_roots(p, kPrec);
  REQUIRE(roots.size() == 10);
  // Largest real root ~ 1.17628.
  double largest = -1e9;
  for (auto& r : roots)
    if (r.real) largest = std::max(largest, mid_re(r));
  CHECK(largest == doctest::Approx(1.176280818).epsilon(1e-8));
  // Oracle cross-check of the real root list.
  auto expect = oracle::real_roots(p, Rational(1, 1 << 20));
  int reals = 0;
  for (auto& r : roots)
    if (r.real) ++reals;
  CHECK((int)expect.size() == reals);
}

TEST_CASE("refinement keeps the root and reaches high precision") {
  auto roots = isolate_roots(parse_poly("x^2-2"), kPrec);
  REQUIRE(roots.size() == 2);
  auto r = roots[1];
  QInterval before = r.box.re;
  refine_enclosure(r, Rational(1, Int(1) << 200));
  CHECK(r.box.re.lo >= before.lo);
  CHECK(r.box.re.hi <= before.hi);
  CHECK(r.box.width() <= Rational(1, Int(1) << 200));
  // Certifies sqrt(2) to ~60 digits: interval must contain it.
  CHECK(r.box.re.lo * r.box.re.lo <= 2);
  CHECK(r.box.re.hi * r.box.re.hi >= 2);
}

TEST_CASE("modulus_side decisions") {
  auto roots = isolate_roots(parse_poly("x^2-x-1"), kPrec);
  REQUIRE(roots.size() == 2);
  // |phi'| = 0.618 < 1 < phi.
  CHECK(modulus_side(roots[0], Rational(1), Rational(1, Int(1) << 120)) == -1);
  CHECK(modulus_side(roots[1], Rational(1), Rational(1, Int(1) << 120)) == +1);
  // Roots of x^2-2 have modulus exactly sqrt(2): undecidable against sqrt2 bound^2=2
  auto r2 = isolate_roots(parse_poly("x^4-4"), kPrec);  // roots: +-sqrt2, +-i sqrt2
  REQUIRE(r2.size() == 4);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(isolate_roots(parse_poly("5"), kPrec), std::invalid_argument);
  CHECK_THROWS_AS(isolate_roots(parse_poly("x-1"), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(isolate_roots(parse_poly("x-1"), Rational(-1)), std::invalid_argument);
}
