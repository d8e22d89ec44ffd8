#pragma once

// Shared constructions for tests: the golden-ratio substitution, the binary
// system, the planar square doubling, and jittered Delone sets.

#include <random>

#include "ap/substitution.hpp"

namespace fixtures {

using namespace ap;

inline IVec iv1(long a) {
  IVec v(1);
  v(0) = a;
  return v;
}

inline IVec iv2(long a, long b) {
  IVec v(2);
  v(0) = a;
  v(1) = b;
  return v;
}

/// Fibonacci: d=1 over Q(phi), frame (1, phi), Q = x phi, colors a,b with
/// D_aa = {0}, D_ab = {0}, D_ba = {phi}, D_bb = {}.
inline MSetSubstitution fibonacci() {
  auto field = NumberField::create(parse_poly("x^2-x-1"), 1);
  auto frame = ModuleFrame::power_basis(field);
  FieldMatrix Q = FieldMatrix::zero(field, 1, 1);
  Q.at(0, 0) = field->gen();
  std::vector<std::vector<std::vector<IVec>>> digits(2, std::vector<std::vector<IVec>>(2));
  digits[0][0] = {iv2(0, 0)};
  digits[0][1] = {iv2(0, 0)};
  digits[1][0] = {iv2(0, 1)};
  return MSetSubstitution::create(frame, Q, 2, digits);
}

/// Binary: d=1 rational, Q = x2, one color, D = {0, 1}.
inline MSetSubstitution binary() {
  auto frame = ModuleFrame::lattice(1);
  auto field = frame->field();
  FieldMatrix Q = FieldMatrix::zero(field, 1, 1);
  Q.at(0, 0) = field->from_rational(2);
  std::vector<std::vector<std::vector<IVec>>> digits(1, std::vector<std::vector<IVec>>(1));
  digits[0][0] = {iv1(0), iv1(1)};
  return MSetSubstitution::create(frame, Q, 1, digits);
}

/// Defective overlap example: d=1 on the (1/2)Z frame, Q = x2, D = {0, 1/2, 1}.
inline MSetSubstitution overlap_defect() {
  auto q = NumberField::rationals();
  FieldMatrix V = FieldMatrix::zero(q, 1, 1);
  V.at(0, 0) = q->from_rational(Rational(1, 2));
  auto frame = ModuleFrame::create(V);
  FieldMatrix Q = FieldMatrix::zero(q, 1, 1);
  Q.at(0, 0) = q->from_rational(2);
  std::vector<std::vector<std::vector<IVec>>> digits(1, std::vector<std::vector<IVec>>(1));
  digits[0][0] = {iv1(0), iv1(1), iv1(2)};  // values 0, 1/2, 1
  return MSetSubstitution::create(frame, Q, 1, digits);
}

/// Square doubling in the plane: Q = 2I, one color, D = unit-square digits.
inline MSetSubstitution square2d() {
  auto frame = ModuleFrame::lattice(2);
  auto field = frame->field();
  FieldMatrix Q = FieldMatrix::zero(field, 2, 2);
  Q.at(0, 0) = field->from_rational(2);
  Q.at(1, 1) = field->from_rational(2);
  std::vector<std::vector<std::vector<IVec>>> digits(1, std::vector<std::vector<IVec>>(1));
  digits[0][0] = {iv2(0, 0), iv2(1, 0), iv2(0, 1), iv2(1, 1)};
  return MSetSubstitution::create(frame, Q, 1, digits);
}

inline MSet integer_points(long lo, long hi) {
  MSet x = MSet::empty(ModuleFrame::lattice(1), 1);
  for (long k = lo; k <= hi; ++k) x.insert(0, iv1(k));
  x.r = 0.5;
  x.R = 0.5;
  return x;
}

/// The classical substitution word: a -> ab, b -> a, iterated from "a".
inline std::string fibonacci_word(int iterations) {
  std::string w = "a";
  for (int i = 0; i < iterations; ++i) {
    std::string next;
    for (char c : w) next += (c == 'a') ? "ab" : "a";
    w = std::move(next);
  }
  return w;
}

/// Jittered-lattice Delone set in dimension d over the (1/q)Z^d frame.
inline MSet jittered_lattice(int d, long q, long extent, unsigned seed) {
  auto field = NumberField::rationals();
  FieldMatrix V = FieldMatrix::zero(field, d, d);
  for (int i = 0; i < d; ++i) V.at(i, i) = field->from_rational(Rational(1, q));
  MSet x = MSet::empty(ModuleFrame::create(V), 1);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> jit(-q / 5, q / 5);
  std::vector<long> idx(d, -extent);
  while (true) {
    IVec n(d);
    for (int i = 0; i < d; ++i) n(i) = idx[i] * q + jit(rng);
    x.insert(0, n);
    int k = 0;
    while (k < d && ++idx[k] > extent) idx[k++] = -extent;
    if (k == d) break;
  }
  auto [r, R] = estimate_parameters(
      x, BoxD::square(Eigen::VectorXd::Constant(d, -double(extent) + 1),
                      Eigen::VectorXd::Constant(d, double(extent) - 1)));
  x.r = r;
  x.R = R;
  return x;
}

}  // namespace fixtures
