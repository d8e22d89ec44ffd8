#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ap {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(const Int& n) { return n.template convert_to<double>(); }

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Int ceil_rat(const Rational& q) { return -floor_rat(-q); }

/// Nearest integer; halves round toward +infinity.
inline Int round_rat(const Rational& q) { return floor_rat(q + Rational(1, 2)); }

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Closed interval with rational endpoints.
struct QInterval {
  Rational lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rational v) : lo(v), hi(std::move(v)) {}
  QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool disjoint(const QInterval& o) const { return hi < o.lo || o.hi < lo; }
  bool intersects(const QInterval& o) const { return !disjoint(o); }

  /// Largest absolute value attained on the interval.
  Rational mag() const {
    Rational a = abs_rat(lo), b = abs_rat(hi);
    return a > b ? a : b;
  }
  /// Smallest absolute value attained on the interval (0 if it straddles 0).
  Rational mig() const {
    if (contains_zero()) return 0;
    Rational a = abs_rat(lo), b = abs_rat(hi);
    return a < b ? a : b;
  }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend QInterval operator-(const QInterval& a, const QInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
      if (*p < lo) lo = *p;
      if (*p > hi) hi = *p;
    }
    return {lo, hi};
  }
  friend QInterval operator*(const Rational& c, const QInterval& a) {
    return c >= 0 ? QInterval{c * a.lo, c * a.hi} : QInterval{c * a.hi, c * a.lo};
  }
  friend QInterval operator+(const QInterval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }
  friend QInterval operator-(const QInterval& a, const Rational& c) { return {a.lo - c, a.hi - c}; }

  /// Reciprocal; interval must not straddle 0.
  QInterval inv() const {
    if (contains_zero()) throw std::domain_error("QInterval::inv through zero");
    return {Rational(1) / hi, Rational(1) / lo};
  }

  QInterval abs() const { return {mig(), mag()}; }
};

/// Enclosure of sqrt(v) with width <= tol, for v >= 0.
QInterval sqrt_enclosure(const Rational& v, const Rational& tol);

/// Axis-aligned complex box with rational bounds.
struct QBox {
  QInterval re, im;

  QBox() = default;
  QBox(QInterval r, QInterval i) : re(std::move(r)), im(std::move(i)) {}

  bool contains_real_axis() const { return im.contains_zero(); }
  bool disjoint(const QBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
  QBox conj() const { return {re, -im}; }
  Rational width() const {
    Rational a = re.width(), b = im.width();
    return a > b ? a : b;
  }

  friend QBox operator+(const QBox& a, const QBox& b) { return {a.re + b.re, a.im + b.im}; }
  friend QBox operator-(const QBox& a, const QBox& b) { return {a.re - b.re, a.im - b.im}; }
  friend QBox operator*(const QBox& a, const QBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  /// Enclosure of |z|^2.
  QInterval abs2() const {
    QInterval r2 = re * re, i2 = im * im;
    return r2 + i2;
  }
  /// Enclosure of |z| within tol.
  QInterval abs_enclosure(const Rational& tol) const {
    QInterval a2 = abs2();
    QInterval lo = sqrt_enclosure(a2.lo, tol), hi = sqrt_enclosure(a2.hi, tol);
    return {lo.lo, hi.hi};
  }
};

}  // namespace ap
