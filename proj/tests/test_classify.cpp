#include "doctest.h"

#include "ap/algebraic.hpp"
#include "oracles/classify_oracle.hpp"

using namespace ap;

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(parse_poly("x^2-x-1")));
  CHECK(is_irreducible(parse_poly("x^2-2")));
  CHECK(is_irreducible(parse_poly("x^4-x^3-x^2-x+1")));
  CHECK(is_irreducible(parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")));
  CHECK_FALSE(is_irreducible(parse_poly("x^2-1")));
  CHECK_FALSE(is_irreducible(parse_poly("x^2-2x")));
  CHECK_FALSE(is_irreducible(parse_poly("x^4-4")));          // (x^2-2)(x^2+2)
  CHECK_FALSE(is_irreducible(parse_poly("x^4+2x^2+1")));     // (x^2+1)^2
  CHECK_FALSE(is_irreducible(parse_poly("x^6-1")));
  CHECK(is_irreducible(parse_poly("x^2+1")));
  CHECK_THROWS_AS(is_irreducible(parse_poly("2x^2-1")), std::invalid_argument);
}

TEST_CASE("named classification examples") {
  auto phi = make_largest_real_root(parse_poly("x^2-x-1"));
  CHECK(classify(phi).cls == NumberClass::Pisot);

  auto sqrt2 = make_largest_real_root(parse_poly("x^2-2"));
  auto c2 = classify(sqrt2);
  CHECK(c2.cls == NumberClass::Lind);  // conjugate -sqrt2 has modulus exactly eta
  CHECK(c2.used_exact_tiebreak);

  auto salem = make_largest_real_root(parse_poly("x^4-x^3-x^2-x+1"));
  auto cs = classify(salem);
  CHECK(cs.cls == NumberClass::Salem);
  CHECK(cs.used_exact_tiebreak);

  auto two = make_largest_real_root(parse_poly("x-2"));
  CHECK(classify(two).cls == NumberClass::Pisot);  // vacuous conjugate condition

  // Complex conjugates of modulus exactly eta: cube root of 2.
  auto cbrt2 = make_largest_real_root(parse_poly("x^3-2"));
  CHECK(classify(cbrt2).cls == NumberClass::Lind);

  auto perron = make_largest_real_root(parse_poly("x^2-x-3"));
  CHECK(classify(perron).cls == NumberClass::Perron);

  // 2cos(2pi/7): a larger-modulus negative conjugate, no class.
  auto none = make_largest_real_root(parse_poly("x^3+x^2-2x-1"));
  CHECK(classify(none).cls == NumberClass::None);
}

TEST_CASE("classification corpus agrees with the brute-force oracle") {
  for (auto& [text, expected] : oracle::classification_corpus()) {
    CAPTURE(text);
    CHECK(oracle::classify_brute(parse_poly(text)) == expected);
    auto a = make_largest_real_root(parse_poly(text));
    CHECK(to_string(classify(a).cls) == expected);
  }
}

TEST_CASE("classification is independent of enclosure precision") {
  for (auto& [text, expected] : oracle::classification_corpus()) {
    CAPTURE(text);
    auto p = parse_poly(text);
    AlgebraicInteger coarse;
    coarse.minpoly = p;
    coarse.roots = isolate_roots(p, Rational(1, 1 << 20));  // ~1e-6
    int best = -1;
    for (int i = 0; i < (int)coarse.roots.size(); ++i)
      if (coarse.roots[i].real) best = i;
    coarse.root_index = best;
    CHECK(to_string(classify(coarse).cls) == expected);
  }
}

TEST_CASE("classification internal consistency") {
  for (auto& [text, expected] : oracle::classification_corpus()) {
    auto a = make_largest_real_root(parse_poly(text));
    auto c = classify(a);
    // Pisot implies the Perron inequality set.
    if (c.cls == NumberClass::Pisot && a.degree() > 1) {
      CHECK(to_double(c.max_conjugate_modulus.hi) < 1.0);
      CHECK(to_double(c.max_conjugate_modulus.hi) < a.value());
    }
    // Salem minimal polynomials are reciprocal with c0 = 1.
    if (c.cls == NumberClass::Salem) {
      CHECK(a.minpoly.c[0] == 1);
      CHECK(reverse_poly(a.minpoly) == a.minpoly);
    }
    // Certified moduli have the stated width.
    for (auto& m : c.conjugate_moduli) CHECK(to_double(m.width()) < 1e-11);
  }
}

TEST_CASE("classify preconditions") {
  // Root <= 1 rejected.
  auto a = make_algebraic_integer(parse_poly("x^2-x-1"), 0);  // -1/phi
  CHECK_THROWS_AS(classify(a), std::invalid_argument);
  auto one = make_algebraic_integer(parse_poly("x-1"), 0);
  CHECK_THROWS_AS(classify(one), std::invalid_argument);
  // Non-real selection rejected.
  auto b = make_algebraic_integer(parse_poly("x^3-2"), 0);
  CHECK_FALSE(b.roots[0].real);
  CHECK_THROWS_AS(classify(b), std::invalid_argument);
  // Reducible polynomial rejected at construction.
  CHECK_THROWS_AS(make_algebraic_integer(parse_poly("x^2-1"), 0), std::invalid_argument);
}

TEST_CASE("pisot family check") {
  auto phi = make_largest_real_root(parse_poly("x^2-x-1"));
  auto fam1 = pisot_family_check({phi});
  CHECK(fam1.is_family);

  auto sqrt2 = make_largest_real_root(parse_poly("x^2-2"));
  auto fam2 = pisot_family_check({sqrt2});
  CHECK_FALSE(fam2.is_family);
  REQUIRE(fam2.witness.has_value());
  CHECK(fam2.witness->first == 0);
  CHECK(fam2.witness->second == 0);  // -sqrt2 is root #0 in canonical order

  auto msqrt2 = sqrt2.conjugate(0);
  auto fam3 = pisot_family_check({sqrt2, msqrt2});
  CHECK(fam3.is_family);

  CHECK_THROWS_AS(pisot_family_check({}), std::invalid_argument);
  CHECK_THROWS_AS(pisot_family_check({phi, phi}), std::invalid_argument);
}

TEST_CASE("expansion spectrum admissibility") {
  auto phi = make_largest_real_root(parse_poly("x^2-x-1"));
  CHECK(ks_admissibility({{phi, 1}}).admissible);

  auto sqrt2 = make_largest_real_root(parse_poly("x^2-2"));
  auto bad = ks_admissibility({{sqrt2, 1}});
  CHECK_FALSE(bad.admissible);
  CHECK(bad.failures.size() == 1);

  auto msqrt2 = sqrt2.conjugate(0);
  CHECK(ks_admissibility({{sqrt2, 1}, {msqrt2, 1}}).admissible);
  // Equal multiplicities required: (sqrt2, 2) with (-sqrt2, 1) fails.
  CHECK_FALSE(ks_admissibility({{sqrt2, 2}, {msqrt2, 1}}).admissible);

  // Modulus <= 1 violates the precondition.
  auto small = phi.conjugate(0);
  CHECK_THROWS_AS(ks_admissibility({{small, 1}}), std::invalid_argument);
}

TEST_CASE("power distances to nearest integer") {
  auto phi = make_largest_real_root(parse_poly("x^2-x-1"));
  auto r = power_mod1(phi, {Rational(1), Rational(0)}, 20);
  REQUIRE(r.distances.size() == 21);
  // Oracle: phi^n + (-1/phi)^n is the integer Lucas number, so the distance is
  // |phi|^-n once that is below 1/2.
  double conj = 0.61803398874989485;
  for (int n = 2; n <= 20; ++n) {
    double expected = std::pow(conj, n);
    CHECK(r.distances[n] == doctest::Approx(expected).epsilon(1e-7));
  }
  CHECK(r.distances[10] == doctest::Approx(0.008131).epsilon(1e-3));

  auto two = make_largest_real_root(parse_poly("x-2"));
  auto r2 = power_mod1(two, {Rational(1)}, 5);
  for (double d : r2.distances) CHECK(d == 0.0);

  auto sqrt2 = make_largest_real_root(parse_poly("x^2-2"));
  auto r3 = power_mod1(sqrt2, {Rational(1), Rational(0)}, 20);
  for (int n = 0; n <= 20; n += 2) CHECK(r3.distances[n] == 0.0);
  double m = 0;
  for (int n = 1; n <= 19; n += 2) m = std::max(m, r3.distances[n]);
  CHECK(m > 0.1);  // odd powers do not decay
}

TEST_CASE("pisot power distances stay under a geometric envelope") {
  // The distance equals |sum of conjugate powers|, which oscillates for complex
  // conjugates, so the sound statement is an envelope bound C * rho^n.
  for (const char* text : {"x^2-x-1", "x^3-x^2-x-1", "x^2-2x-1"}) {
    CAPTURE(text);
    auto a = make_largest_real_root(parse_poly(text));
    auto c = classify(a);
    REQUIRE(c.cls == NumberClass::Pisot);
    double rho = to_double(c.max_conjugate_modulus.hi) + 1e-6;
    auto r = power_mod1(a, [&] {
      std::vector<Rational> x(a.degree(), Rational(0));
      x[0] = 1;
      return x;
    }(), 30);
    int s = a.degree();
    double envelope = 0;
    for (int n = 0; n <= s + 1; ++n)
      envelope = std::max(envelope, r.distances[n] / std::pow(rho, n));
    envelope = envelope * (a.degree() > 1 ? 2.0 : 1.0) + 1.0;
    for (int n = s + 2; n <= 30; ++n)
      CHECK(r.distances[n] <= envelope * std::pow(rho, n) + 1e-12);
    // Strictly real-conjugate case decays at the exact rate.
    if (text == std::string("x^2-x-1"))
      for (int n = 2; n < 30; ++n)
        CHECK(r.distances[n + 1] <= rho * r.distances[n] + 1e-12);
  }
}

TEST_CASE("companion matrix layout") {
  auto m = companion_matrix(parse_poly("x^2-x-1"));
  // columns: e2, (c0, c1) negated -> [[0,1],[1,1]]
  CHECK(m[0][0] == 0);
  CHECK(m[0][1] == 1);
  CHECK(m[1][0] == 1);
  CHECK(m[1][1] == 1);
}
