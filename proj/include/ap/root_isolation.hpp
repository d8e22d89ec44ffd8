#pragma once

#include <vector>

#include "ap/polynomial.hpp"

namespace ap {

/// Complex number with exact rational parts.
struct QComplex {
  Rational re, im;

  QComplex() : re(0), im(0) {}
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  QComplex conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  /// 1-norm, an upper bound for the modulus within sqrt(2).
  Rational norm1() const { return abs_rat(re) + abs_rat(im); }

  friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QComplex operator/(const QComplex& a, const QComplex& b) {
    Rational n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("QComplex division by zero");
    QComplex t = a * b.conj();
    return {t.re / n2, t.im / n2};
  }
};

QComplex eval_at(const ZPoly& p, const QComplex& z);

/// Division of complex boxes; the divisor box must exclude zero.
QBox box_div(const QBox& num, const QBox& den);

/// Certified enclosure of one root of a square-free integer polynomial.
/// The box contains exactly one root of `factor`; `real` is an exact determination,
/// and real roots always carry a box with im == [0,0].
struct RootEnclosure {
  ZPoly factor;
  QBox box;
  bool real = false;
  int multiplicity = 1;

  QInterval real_interval() const { return box.re; }
  double approx_re() const { return to_double(box.re.mid()); }
  double approx_im() const { return to_double(box.im.mid()); }
};

/// Isolates all complex roots of p (monic not required; degree >= 1) with certified
/// pairwise disjoint enclosures of width <= precision, counted with multiplicity and
/// sorted by (real part, imaginary part).
std::vector<RootEnclosure> isolate_roots(const ZPoly& p, const Rational& precision);

/// Shrinks the enclosure to width <= target via interval Newton. The refined box is
/// contained in the old one, so the selected root never changes.
void refine_enclosure(RootEnclosure& r, const Rational& target);

/// Refines r until its box either certifies |z| < bound, |z| > bound, or the width
/// drops below `giveup` while still straddling; returns -1 / +1, or 0 for undecided.
int modulus_side(RootEnclosure& r, const Rational& bound, const Rational& giveup);

}  // namespace ap
