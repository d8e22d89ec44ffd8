#include "doctest.h"

#include "fixtures.hpp"

using namespace ap;
using namespace fixtures;

TEST_CASE("frame validation") {
  CHECK(ModuleFrame::lattice(2)->s() == 2);
  auto field = NumberField::create(parse_poly("x^2-x-1"), 1);
  auto frame = ModuleFrame::power_basis(field);
  CHECK(frame->d() == 1);
  CHECK(frame->s() == 2);
  CHECK(frame->position(iv2(1, 1))(0) == doctest::Approx(2.618033988).epsilon(1e-9));
  // Dependent columns rejected: V = [1, 2] over Q has the relation 2*v1 - v2 = 0.
  auto q = NumberField::rationals();
  FieldMatrix bad = FieldMatrix::zero(q, 1, 2);
  bad.at(0, 0) = q->from_rational(1);
  bad.at(0, 1) = q->from_rational(2);
  CHECK_THROWS_AS(ModuleFrame::create(bad), std::invalid_argument);
}

TEST_CASE("mset insert and canonical order") {
  MSet x = MSet::empty(ModuleFrame::lattice(1), 2);
  x.insert(0, iv1(3));
  x.insert(0, iv1(1));
  x.insert(0, iv1(3));  // duplicate ignored
  x.insert(1, iv1(3));  // colors may share points
  CHECK(x.points[0].size() == 2);
  CHECK(x.points[1].size() == 1);
  CHECK(x.support().size() == 2);
  CHECK(x.contains(0, iv1(1)));
  CHECK_FALSE(x.contains(0, iv1(2)));
}

TEST_CASE("pointset file round-trip") {
  auto fib = fibonacci();
  Cluster seed = MSet::empty(fib.frame, 2);
  seed.insert(0, iv2(0, 0));
  MSet patch = apply_phi(fib, seed, 6, false).set;
  patch.r = 0.5;
  std::string text = write_pointset(patch);
  MSet back = parse_pointset(text);
  CHECK(back == patch);
  CHECK(back.frame->same_frame(*patch.frame));
  CHECK(write_pointset(back) == text);
  // CSV has one line per point plus header.
  auto csv = pointset_csv(patch);
  int lines = (int)std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == patch.total_points() + 1);
}

TEST_CASE("translation equivalence") {
  MSet a = MSet::empty(ModuleFrame::lattice(1), 1);
  a.insert(0, iv1(0));
  a.insert(0, iv1(2));
  MSet b = a.translate(iv1(5));
  auto t = translation_between(a, b);
  REQUIRE(t.has_value());
  CHECK((*t)(0) == 5);
  b.insert(0, iv1(9));
  CHECK_FALSE(translation_between(a, b).has_value());
}

TEST_CASE("estimate_parameters named examples") {
  auto z = integer_points(-10, 10);
  auto [r1, R1] = estimate_parameters(z, BoxD::interval(-10, 10));
  CHECK(r1 == doctest::Approx(0.5));
  CHECK(R1 == doctest::Approx(0.5).epsilon(0.05));

  // 2Z union (2Z + 1/2): gaps 1/2 and 3/2.
  auto field = NumberField::rationals();
  FieldMatrix V = FieldMatrix::zero(field, 1, 1);
  V.at(0, 0) = field->from_rational(Rational(1, 2));
  MSet x = MSet::empty(ModuleFrame::create(V), 1);
  for (long k = -10; k <= 10; ++k) {
    x.insert(0, iv1(4 * k));
    x.insert(0, iv1(4 * k + 1));
  }
  auto [r2, R2] = estimate_parameters(x, BoxD::interval(-9, 9));
  CHECK(r2 == doctest::Approx(0.25));
  CHECK(R2 == doctest::Approx(0.75).epsilon(0.05));

  CHECK_THROWS_AS(estimate_parameters(MSet::empty(ModuleFrame::lattice(1), 1),
                                      BoxD::interval(0, 1)),
                  std::invalid_argument);
}

TEST_CASE("finite type census of the integers") {
  auto z = integer_points(-200, 200);
  auto res = finite_type_probe(z, 5.0, BoxD::interval(-150, 150));
  CHECK(res.census == 11);  // differences -5..5
  CHECK(res.consistent);
  // Lattice census equals the exact count of lattice points in the ball.
  auto res2 = finite_type_probe(z, 7.0, BoxD::interval(-150, 150));
  CHECK(res2.census == 15);
  CHECK(res2.census >= res.census);  // monotone in T
  CHECK(res.cluster_census == 1);
  CHECK_THROWS_AS(finite_type_probe(z, 5.0, BoxD::interval(-10, 10)), std::invalid_argument);
}

TEST_CASE("finite type fails for a jittered set") {
  auto x = jittered_lattice(1, 1000, 260, 7);
  auto res = finite_type_probe(x, 2.0, BoxD::interval(-250, 250));
  CHECK_FALSE(res.consistent);
  CHECK(res.census > res.census_half);
}

TEST_CASE("meyer probe of the integers") {
  auto z = integer_points(-200, 200);
  auto res = meyer_probe(z, BoxD::interval(-40, 40));
  CHECK(res.consistent);
  REQUIRE(res.f_set.size() == 1);
  CHECK(res.f_set[0](0) == 0);
}

TEST_CASE("meyer probe fails for a jittered set") {
  auto x = jittered_lattice(1, 1000, 260, 11);
  auto res = meyer_probe(x, BoxD::interval(-40, 40));
  CHECK_FALSE(res.consistent);
}

TEST_CASE("chain on the integers") {
  auto z = integer_points(-5, 15);
  auto c = chain(z, iv1(0), iv1(10));
  REQUIRE(c.size() == 11);
  for (size_t i = 0; i < c.size(); ++i) CHECK(c[i](0) == (long)i);
  // Step and length bounds with r = R = 1/2.
  double C = 1.0 / (2 * 0.5) + 1.0 / 0.5;
  CHECK((double)c.size() <= C * 10 + 1);
  // Identical endpoints give the singleton chain.
  auto c2 = chain(z, iv1(3), iv1(3));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0](0) == 3);
  MSet no_params = integer_points(-5, 15);
  no_params.r.reset();
  no_params.R.reset();
  CHECK_THROWS_AS(chain(no_params, iv1(0), iv1(1)), std::invalid_argument);
}

TEST_CASE("chain bounds on jittered Delone sets") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 1 + (trial % 2);
    auto x = fixtures::jittered_lattice(d, 1000, d == 1 ? 120 : 14, 100 + trial);
    REQUIRE(x.r);
    REQUIRE(x.R);
    auto support = x.support();
    std::uniform_int_distribution<size_t> pick(0, support.size() - 1);
    for (int pair = 0; pair < 4; ++pair) {
      IVec a = support[pick(rng)], b = support[pick(rng)];
      auto c = chain(x, a, b);
      double dist = (x.frame->position(a) - x.frame->position(b)).norm();
      double C = 1.0 / (2 * *x.R) + 1.0 / *x.r;
      CHECK((double)c.size() <= C * dist + 1 + 1e-9);
      for (size_t i = 0; i + 1 < c.size(); ++i)
        CHECK((x.frame->position(c[i]) - x.frame->position(c[i + 1])).norm() <=
              4 * *x.R + 1e-9);
    }
  }
}

TEST_CASE("address audit of a lattice is exact") {
  MSet z2 = MSet::empty(ModuleFrame::lattice(2), 1);
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) z2.insert(0, iv2(a, b));
  auto res = address_audit(z2);
  CHECK(res.residual_sup == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(res.linear_part(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.linear_part(1, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.linear_part(0, 1) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(res.residual_bounded);
  // Doubling construction agrees.
  auto L2 = address_linear_by_doubling(z2, 3);
  CHECK((L2 - res.linear_part).norm() < 1e-6);
}

TEST_CASE("address additivity is exact by construction") {
  auto fib = fibonacci();
  Cluster seed = MSet::empty(fib.frame, 2);
  seed.insert(0, iv2(0, 0));
  auto patch = apply_phi(fib, seed, 8, false).set;
  auto support = patch.support();
  for (size_t i = 0; i < std::min<size_t>(10, support.size()); ++i)
    for (size_t j = 0; j < std::min<size_t>(10, support.size()); ++j) {
      IVec sum = support[i] + support[j];
      FieldElem v = fib.frame->value1(support[i]) + fib.frame->value1(support[j]);
      CHECK(fib.frame->value1(sum) == v);
    }
}

TEST_CASE("inflation audit of the integers by 2") {
  auto z = integer_points(-400, 400);
  auto two = make_largest_real_root(parse_poly("x-2"));
  auto res = inflation_audit(z, two, BoxD::interval(-300, 300));
  CHECK(res.inclusion_ok);
  CHECK(res.finite_type_consistent);
  CHECK(res.meyer_consistent);
  CHECK(res.number_class == NumberClass::Pisot);
  CHECK_FALSE(res.contradiction);
}
