#include "ap/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace ap {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
  if (x == 0.0) return 0;
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [1/2, 1)
  Int mant = Int(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) r *= Rational(Int(1) << exp);
  else r /= Rational(Int(1) << (-exp));
  return r;
}

QInterval sqrt_enclosure(const Rational& v, const Rational& tol) {
  if (v < 0) throw std::domain_error("sqrt_enclosure: negative");
  if (v == 0) return {Rational(0), Rational(0)};
  Rational lo = 0, hi = v < 1 ? Rational(1) : v;
  while (hi - lo > tol) {
    Rational m = (lo + hi) / 2;
    if (m * m <= v) lo = m;
    else hi = m;
  }
  return {lo, hi};
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) c[i] = Rational(p.c[i]);
  return QPoly(std::move(c));
}

ZPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return {};
  Int den = 1;
  for (const auto& q : p.c) den = boost::multiprecision::lcm(den, denominator(q));
  std::vector<Int> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    Rational v = p.c[i] * Rational(den);
    c[i] = numerator(v);
  }
  Int g = 0;
  for (const auto& v : c) g = boost::multiprecision::gcd(g, v);
  if (g == 0) return {};
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return ZPoly(std::move(c));
}

Int resultant(const ZPoly& a, const ZPoly& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) return boost::multiprecision::pow(a.c[0], n);
  if (n == 0) return boost::multiprecision::pow(b.c[0], m);
  int dim = m + n;
  // Sylvester matrix, rows are shifted copies of a then b.
  std::vector<std::vector<Rational>> s(dim, std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = Rational(a.c[m - j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = Rational(b.c[n - j]);
  // Fraction-free-ish elimination over Q (exact).
  Rational det = 1;
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int r = col; r < dim; ++r)
      if (s[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    Rational inv = Rational(1) / s[col][col];
    for (int r = col + 1; r < dim; ++r) {
      if (s[r][col] == 0) continue;
      Rational f = s[r][col] * inv;
      for (int cc = col; cc < dim; ++cc) s[r][cc] -= f * s[col][cc];
    }
  }
  if (denominator(det) != 1) throw std::logic_error("resultant: non-integer determinant");
  return numerator(det);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
  std::vector<std::pair<ZPoly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm over Q.
  QPoly f = to_qpoly(p);
  QPoly fp = derivative(f);
  QPoly a = gcd(f, fp);
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(fp, a).first;
  QPoly d = c - derivative(b);
  int k = 1;
  while (b.degree() >= 1) {
    QPoly g = gcd(b, d);
    if (g.degree() >= 1) out.push_back({primitive_part(g), k});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
    ++k;
  }
  return out;
}

ZPoly squarefree_part(const ZPoly& p) {
  ZPoly out = ZPoly::constant(1);
  for (auto& [f, k] : squarefree_decomposition(p)) {
    (void)k;
    out = out * f;
  }
  return out;
}

ZPoly reverse_poly(const ZPoly& p) {
  std::vector<Int> c(p.c.rbegin(), p.c.rend());
  return ZPoly(std::move(c));
}

ZPoly shift_poly(const ZPoly& p, const Int& a) {
  // Successive synthetic divisions by (x - a); the remainders are the Taylor
  // coefficients of p at a.
  std::vector<Int> c = p.c;
  int n = p.degree();
  if (n < 0) return {};
  std::vector<Int> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    Int carry = 0;
    for (int i = n - k; i >= 0; --i) {
      c[i] += carry * a;
      carry = c[i];
    }
    out[k] = c[0];
    for (int i = 0; i < n - k; ++i) c[i] = c[i + 1];
  }
  return ZPoly(std::move(out));
}

ZPoly scale_half(const ZPoly& p) {
  int n = p.degree();
  if (n < 0) return {};
  std::vector<Int> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = p.c[i] << (n - i);
  return ZPoly(std::move(c));
}

ZPoly self_reciprocal_reduce(const ZPoly& p) {
  int n = p.degree();
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("self_reciprocal_reduce: odd degree");
  if (!(reverse_poly(p) == p)) throw std::invalid_argument("self_reciprocal_reduce: not self-reciprocal");
  int m = n / 2;
  // x^k + x^-k = P_k(w), P_0 = 2, P_1 = w, P_{k+1} = w P_k - P_{k-1}.
  ZPoly w = ZPoly::x();
  ZPoly pk_prev = ZPoly::constant(2), pk = w;
  ZPoly q = ZPoly::constant(p.c[m]);
  for (int k = 1; k <= m; ++k) {
    q = q + p.c[m + k] * pk;
    ZPoly nxt = w * pk - pk_prev;
    pk_prev = pk;
    pk = nxt;
  }
  return q;
}

Rational root_bound(const ZPoly& p) {
  int n = p.degree();
  if (n < 1) return 1;
  Rational lead = Rational(p.leading());
  Rational m = 0;
  for (int i = 0; i < n; ++i) {
    Rational v = abs_rat(Rational(p.c[i]) / lead);
    if (v > m) m = v;
  }
  Rational b = 1 + m;
  // Round up to a power of two for dyadic-friendly intervals.
  Rational pow2 = 1;
  while (pow2 < b) pow2 *= 2;
  return pow2;
}

QInterval eval_interval(const ZPoly& p, const QInterval& iv) {
  QInterval acc(Rational(0));
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
    acc = acc * iv + Rational(*it);
  return acc;
}

QInterval eval_interval(const QPoly& p, const QInterval& iv) {
  QInterval acc(Rational(0));
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * iv + *it;
  return acc;
}

QBox eval_box(const ZPoly& p, const QBox& z) {
  QBox acc{QInterval(Rational(0)), QInterval(Rational(0))};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + Rational(*it);
  }
  return acc;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolate: mismatched or empty point lists");
  size_t m = xs.size();
  // Newton divided differences.
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < m; ++j)
    for (size_t i = m - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  QPoly acc = QPoly::constant(dd[m - 1]);
  for (size_t i = m - 1; i-- > 0;) {
    QPoly lin(std::vector<Rational>{-xs[i], Rational(1)});
    acc = acc * lin + QPoly::constant(dd[i]);
  }
  return acc;
}

std::string poly_to_string(const ZPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    Int a = boost::multiprecision::abs(c);
    if (a != 1 || k == 0) os << a.str();
    if (k >= 1) {
      os << var;
      if (k >= 2) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

ZPoly parse_poly(const std::string& text) {
  // Grammar: term ([+-] term)*, term = [int][x[^int]]
  std::vector<Int> coeffs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto fail = [&](const std::string& msg) -> ZPoly {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " + msg);
  };
  skip_ws();
  if (i >= text.size()) fail("empty input");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    bool have_num = false;
    Int mag = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      mag = mag * 10 + (text[i] - '0');
      ++i;
      have_num = true;
    }
    skip_ws();
    int exp = 0;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i])) fail("expected exponent");
        exp = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
          exp = exp * 10 + (text[i] - '0');
          ++i;
        }
      }
    } else if (!have_num) {
      fail("expected coefficient or 'x'");
    }
    if (!have_num) mag = 1;
    if ((int)coeffs.size() <= exp) coeffs.resize(exp + 1, Int(0));
    coeffs[exp] += sign * mag;
    first = false;
    skip_ws();
  }
  return ZPoly(std::move(coeffs));
}

}  // namespace ap
