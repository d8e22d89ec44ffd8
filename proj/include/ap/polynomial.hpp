#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ap/numeric.hpp"

namespace ap {

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient vector.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(T v) {
    Poly p;
    if (!(v == T(0))) p.c.push_back(std::move(v));
    return p;
  }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const T& leading() const { return c.back(); }
  T coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : T(0); }
  bool monic() const { return !c.empty() && c.back() == T(1); }

  bool operator==(const Poly& o) const { return c == o.c; }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }
};

using ZPoly = Poly<Int>;
using QPoly = Poly<Rational>;

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
  std::vector<T> r = a.c;
  for (auto& v : r) v = -v;
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& a) {
  std::vector<T> r = a.c;
  for (auto& v : r) v = s * v;
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.c.size() <= 1) return {};
  std::vector<T> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = T((long)i) * a.c[i];
  return Poly<T>(std::move(r));
}

/// Quotient and remainder over a field scalar type.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = a.c;
  int db = b.degree();
  if (a.degree() < db) return {Poly<T>{}, a};
  std::vector<T> quo(a.degree() - db + 1, T(0));
  for (int k = a.degree(); k >= db; --k) {
    T f = rem[k] / b.c[db];
    if (f == T(0)) continue;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c[j];
  }
  return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

/// Monic gcd over a field scalar type.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    T inv = T(1) / a.leading();
    a = inv * a;
  }
  return a;
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> extended_gcd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> u0 = Poly<T>::constant(T(1)), u1;
  Poly<T> v0, v1 = Poly<T>::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<T> u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero()) {
    T inv = T(1) / r0.leading();
    r0 = inv * r0;
    u0 = inv * u0;
    v0 = inv * v0;
  }
  return {r0, u0, v0};
}

QPoly to_qpoly(const ZPoly& p);
/// Clears denominators and divides by integer content; sign fixed so leading > 0.
ZPoly primitive_part(const QPoly& p);

/// Exact resultant of two integer polynomials (Sylvester matrix, fraction-free elimination).
Int resultant(const ZPoly& a, const ZPoly& b);

/// Square-free decomposition over Q: returns factors f_k (k = multiplicity) as
/// primitive integer polynomials, pairwise coprime, with p ~ prod f_k^k up to a constant.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);

/// Square-free part (product of distinct irreducible factors), primitive.
ZPoly squarefree_part(const ZPoly& p);

/// x^deg * p(1/x).
ZPoly reverse_poly(const ZPoly& p);

/// p(x + a) for integer a (exact Taylor shift).
ZPoly shift_poly(const ZPoly& p, const Int& a);

/// 2^(deg) * p(x/2) — dyadic rescale used by bisection transforms.
ZPoly scale_half(const ZPoly& p);

/// For a self-reciprocal p of even degree 2m (p == reverse_poly(p)), the unique q
/// of degree m with p(x) = x^m q(x + 1/x).
ZPoly self_reciprocal_reduce(const ZPoly& p);

/// Cauchy bound: all complex roots have |z| < bound (integer power of two).
Rational root_bound(const ZPoly& p);

/// Interval evaluation: encloses { p(x) : x in iv }.
QInterval eval_interval(const ZPoly& p, const QInterval& iv);
QInterval eval_interval(const QPoly& p, const QInterval& iv);
/// Complex box evaluation.
QBox eval_box(const ZPoly& p, const QBox& z);

/// Unique interpolating polynomial through (xs[i], ys[i]) with distinct xs.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

std::string poly_to_string(const ZPoly& p, const std::string& var = "x");
/// Parses e.g. "x^2-x-1", "2x^3 + 5", "x^10+x^9-x^7". Throws on malformed input.
ZPoly parse_poly(const std::string& text);

}  // namespace ap
