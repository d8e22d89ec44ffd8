#include "ap/root_isolation.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ap {

namespace {

using Float100 = boost::multiprecision::cpp_bin_float_100;
using Float300 =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<300>>;

template <class Real>
struct Cx {
  Real re{}, im{};
  Cx() = default;
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    Real n = b.re * b.re + b.im * b.im;
    Cx t{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    return {t.re / n, t.im / n};
  }
  Real norm2() const { return re * re + im * im; }
};

template <class Real>
Cx<Real> eval_cx(const std::vector<Real>& c, const Cx<Real>& z) {
  Cx<Real> acc{Real(0), Real(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

template <class Real>
Real real_from_int(const Int& v) {
  return Real(v.str());
}
template <>
double real_from_int<double>(const Int& v) {
  return to_double(v);
}

Rational rat_from(const double& x) { return rational_from_double(x); }
Rational rat_from(const Float100& x) {
  return x.convert_to<boost::multiprecision::cpp_rational>();
}
Rational rat_from(const Float300& x) {
  return x.convert_to<boost::multiprecision::cpp_rational>();
}

/// Aberth-Ehrlich simultaneous iteration from deterministic circle starts.
template <class Real>
std::vector<Cx<Real>> aberth(const std::vector<Real>& coeffs, int iterations) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<Real> dcoeffs(n);
  for (int i = 1; i <= n; ++i) dcoeffs[i - 1] = Real(i) * coeffs[i];
  Real radius = Real(1);
  for (int i = 0; i < n; ++i) {
    Real v = abs(coeffs[i] / coeffs[n]);
    if (v > radius) radius = v;
  }
  radius = Real(1) + radius;
  std::vector<Cx<Real>> z(n);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * pi * k / n + 0.37;
    Real r = radius * Real(0.5 + 0.35 * ((k % 3) + 1) / 3.0);
    z[k] = {r * Real(std::cos(ang)), r * Real(std::sin(ang))};
  }
  for (int it = 0; it < iterations; ++it) {
    for (int k = 0; k < n; ++k) {
      Cx<Real> pv = eval_cx(coeffs, z[k]);
      Cx<Real> dv = eval_cx(dcoeffs, z[k]);
      if (dv.norm2() == Real(0)) continue;
      Cx<Real> newton = pv / dv;
      Cx<Real> sum{Real(0), Real(0)};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Cx<Real> d = z[k] - z[j];
        Real n2 = d.norm2();
        if (n2 == Real(0)) {
          d = {Real(1e-12), Real(1e-12)};
          n2 = d.norm2();
        }
        sum = sum + Cx<Real>{d.re / n2, -d.im / n2};
      }
      Cx<Real> denom{Real(1) - (newton.re * sum.re - newton.im * sum.im),
                     -(newton.re * sum.im + newton.im * sum.re)};
      Cx<Real> step = denom.norm2() == Real(0) ? newton : newton / denom;
      z[k] = z[k] - step;
    }
  }
  return z;
}

template <class Real>
std::vector<QComplex> approximate_roots(const ZPoly& p, int iterations) {
  int n = p.degree();
  std::vector<Real> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs[i] = real_from_int<Real>(p.c[i]);
  auto z = aberth(coeffs, iterations);
  // Force conjugate symmetry: pair approximations with mirrored imaginary parts
  // and average. Any distinct points are valid for the certification bound, so
  // this only improves the enclosures.
  std::vector<QComplex> out(n);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    Real best{};
    int match = -1;
    for (int j = 0; j < n; ++j) {
      if (j == i || used[j]) continue;
      Real d = (z[i].re - z[j].re) * (z[i].re - z[j].re) +
               (z[i].im + z[j].im) * (z[i].im + z[j].im);
      if (match < 0 || d < best) {
        best = d;
        match = j;
      }
    }
    Real self = z[i].im * z[i].im * Real(4);
    if (match >= 0 && best < self) {
      used[i] = used[match] = true;
      Real re = (z[i].re + z[match].re) / 2;
      Real im = (z[i].im - z[match].im) / 2;
      out[i] = {rat_from(re), rat_from(im)};
      out[match] = {rat_from(re), -rat_from(im)};
    } else {
      used[i] = true;
      out[i] = {rat_from(z[i].re), Rational(0)};
    }
  }
  return out;
}

struct CertifiedDisk {
  QComplex center;
  Rational radius;
  bool real = false;
};

bool pairwise_disjoint(const std::vector<CertifiedDisk>& d) {
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      Rational rr = d[i].radius + d[j].radius;
      if ((d[i].center - d[j].center).norm2() <= rr * rr) return false;
    }
  return true;
}

/// Exact realness for pairwise disjoint disks of a real polynomial: the conjugate
/// of disk i meets only disk i itself iff its root is real. Returns false on an
/// undecided configuration (enclosures too coarse).
bool determine_real(std::vector<CertifiedDisk>& disks) {
  for (auto& di : disks) {
    QComplex cconj = di.center.conj();
    bool meets_self = false, meets_other = false;
    for (const auto& dj : disks) {
      Rational rr = di.radius + dj.radius;
      bool meets = (cconj - dj.center).norm2() <= rr * rr;
      if (&dj == &di) meets_self = meets;
      else meets_other = meets_other || meets;
    }
    if (meets_self && !meets_other) di.real = true;
    else if (!meets_self && meets_other) di.real = false;
    else return false;
  }
  return true;
}

/// Certified isolation of the roots of a square-free primitive factor.
/// Containment bound (Gerschgorin-type, Smith): with W_i = f(z_i)/(lc * prod_{j!=i}
/// (z_i - z_j)) for pairwise distinct points z_i, the union of disks D(z_i, n|W_i|)
/// contains every root of f, and a connected component made of k disks contains
/// exactly k roots. The radii below bound n|W_i| from above in exact rational
/// arithmetic, so disjoint disks isolate one root each.
std::vector<CertifiedDisk> certify_squarefree(const ZPoly& f) {
  int n = f.degree();
  if (n == 1) {
    Rational r = -Rational(f.c[0]) / Rational(f.c[1]);
    return {{QComplex{r, Rational(0)}, Rational(0), true}};
  }
  Rational lc(f.leading());
  for (int tier = 0; tier < 3; ++tier) {
    std::vector<QComplex> approx;
    if (tier == 0) approx = approximate_roots<double>(f, 80);
    else if (tier == 1) approx = approximate_roots<Float100>(f, 200);
    else approx = approximate_roots<Float300>(f, 500);
    bool distinct = true;
    for (size_t i = 0; i < approx.size() && distinct; ++i)
      for (size_t j = i + 1; j < approx.size(); ++j)
        if ((approx[i] - approx[j]).is_zero()) {
          distinct = false;
          break;
        }
    if (!distinct) continue;
    std::vector<CertifiedDisk> disks(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      QComplex num = eval_at(f, approx[i]);
      num.re /= lc;
      num.im /= lc;
      QComplex den{Rational(1), Rational(0)};
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (approx[i] - approx[j]);
      if (den.is_zero()) {
        ok = false;
        break;
      }
      QComplex w = num / den;
      disks[i] = {approx[i], Rational(n) * w.norm1(), false};
    }
    if (!ok) continue;
    if (!pairwise_disjoint(disks)) continue;
    if (!determine_real(disks)) continue;
    return disks;
  }
  throw std::runtime_error("root isolation failed to certify enclosures (degree " +
                           std::to_string(n) + ")");
}

}  // namespace

QComplex eval_at(const ZPoly& p, const QComplex& z) {
  QComplex acc;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    acc = acc * z;
    acc.re += Rational(*it);
  }
  return acc;
}

QBox box_div(const QBox& num, const QBox& den) {
  QInterval n2 = den.abs2();
  if (n2.contains_zero()) throw std::domain_error("box_div: divisor box contains zero");
  QBox t = num * den.conj();
  QInterval inv = n2.inv();
  return {t.re * inv, t.im * inv};
}

namespace {

int bit_length(Int v) {
  if (v < 0) v = -v;
  int b = 0;
  while (v > 0) {
    v >>= 1;
    ++b;
  }
  return b;
}

Rational dyadic_down(const Rational& x, int bits) {
  return Rational(floor_div(numerator(x) << bits, denominator(x)), Int(1) << bits);
}
Rational dyadic_up(const Rational& x, int bits) { return -dyadic_down(-x, bits); }

/// Bits so that 2^-bits is well below both the current width and the target.
int working_bits(const Rational& width, const Rational& target) {
  auto bits_for = [](const Rational& w) {
    if (w <= 0) return 64;
    // smallest k with 2^k >= 1/w
    return bit_length(floor_div(denominator(w), numerator(w))) + 1;
  };
  return std::max(bits_for(width), bits_for(target)) + 10;
}

QInterval round_outward(const QInterval& iv, int bits) {
  return {dyadic_down(iv.lo, bits), dyadic_up(iv.hi, bits)};
}

}  // namespace

void refine_enclosure(RootEnclosure& r, const Rational& target) {
  if (r.box.width() <= target) return;
  QPoly fq = to_qpoly(r.factor);
  ZPoly d = derivative(r.factor);
  int guard = 0;
  while (r.box.width() > target) {
    if (++guard > 20000) throw std::runtime_error("refine_enclosure: stalled");
    // Keep rational complexity bounded: outward-round the box to dyadics a little
    // finer than the current width, and evaluate at a dyadic near-midpoint.
    int bits = working_bits(r.box.width(), target);
    r.box = QBox{round_outward(r.box.re, bits),
                 r.real ? QInterval{Rational(0), Rational(0)} : round_outward(r.box.im, bits)};
    QComplex c{dyadic_down(r.box.re.mid(), bits), r.real ? Rational(0) : dyadic_down(r.box.im.mid(), bits)};
    if (c.re < r.box.re.lo) c.re = r.box.re.lo;
    if (!r.real && c.im < r.box.im.lo) c.im = r.box.im.lo;
    QComplex pc = eval_at(r.factor, c);
    if (pc.is_zero()) {
      r.box = QBox{QInterval{c.re, c.re}, QInterval{c.im, c.im}};
      return;
    }
    QBox dbox = eval_box(d, r.box);
    bool newton_ok = !dbox.abs2().contains_zero();
    if (newton_ok) {
      QBox num{QInterval{pc.re, pc.re}, QInterval{pc.im, pc.im}};
      QBox step = box_div(num, dbox);
      QInterval re{c.re - step.re.hi, c.re - step.re.lo};
      QInterval im{c.im - step.im.hi, c.im - step.im.lo};
      QInterval re2{std::max(re.lo, r.box.re.lo), std::min(re.hi, r.box.re.hi)};
      QInterval im2 = r.real ? QInterval{Rational(0), Rational(0)}
                             : QInterval{std::max(im.lo, r.box.im.lo), std::min(im.hi, r.box.im.hi)};
      if (re2.lo > re2.hi || im2.lo > im2.hi)
        throw std::logic_error("refine_enclosure: empty Newton intersection");
      QBox candidate{round_outward(re2, bits),
                     r.real ? im2 : round_outward(im2, bits)};
      if (candidate.width() < r.box.width()) {
        r.box = candidate;
        continue;
      }
    }
    if (r.real) {
      // Sign bisection; a simple isolated real root keeps opposite endpoint signs.
      QInterval iv = r.box.re;
      Rational flo = fq.eval(iv.lo);
      if (flo == 0) {
        r.box = QBox{QInterval{iv.lo, iv.lo}, QInterval{Rational(0), Rational(0)}};
        return;
      }
      Rational fhi = fq.eval(iv.hi);
      if (fhi == 0) {
        r.box = QBox{QInterval{iv.hi, iv.hi}, QInterval{Rational(0), Rational(0)}};
        return;
      }
      Rational m = iv.mid();
      Rational fm = fq.eval(m);
      if (fm == 0) {
        r.box = QBox{QInterval{m, m}, QInterval{Rational(0), Rational(0)}};
        return;
      }
      if ((flo < 0) == (fm < 0)) r.box.re = QInterval{m, iv.hi};
      else r.box.re = QInterval{iv.lo, m};
      continue;
    }
    throw std::runtime_error("refine_enclosure: no contraction");
  }
}

int modulus_side(RootEnclosure& r, const Rational& bound, const Rational& giveup) {
  while (true) {
    QInterval a2 = r.box.abs2();
    Rational b2 = bound * bound;
    if (a2.hi < b2) return -1;
    if (a2.lo > b2) return +1;
    if (r.box.width() < giveup) return 0;
    refine_enclosure(r, r.box.width() / 4);
  }
}

std::vector<RootEnclosure> isolate_roots(const ZPoly& p, const Rational& precision) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_roots: degree must be >= 1");
  if (precision <= 0) throw std::invalid_argument("isolate_roots: precision must be positive");
  auto factors = squarefree_decomposition(p);
  std::vector<RootEnclosure> roots;
  for (auto& [f, mult] : factors) {
    auto disks = certify_squarefree(f);
    for (auto& d : disks) {
      RootEnclosure r;
      r.factor = f;
      r.multiplicity = mult;
      r.real = d.real;
      if (d.real) {
        r.box = QBox{QInterval{d.center.re - d.radius, d.center.re + d.radius},
                     QInterval{Rational(0), Rational(0)}};
      } else {
        r.box = QBox{QInterval{d.center.re - d.radius, d.center.re + d.radius},
                     QInterval{d.center.im - d.radius, d.center.im + d.radius}};
      }
      roots.push_back(std::move(r));
    }
  }
  for (auto& r : roots) refine_enclosure(r, precision);
  // Boxes circumscribe the certified disks, so enforce box disjointness for every
  // pair; the roots are distinct, hence refinement terminates.
  for (int guard = 0;; ++guard) {
    bool again = false;
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (!roots[i].box.disjoint(roots[j].box)) {
          refine_enclosure(roots[i], roots[i].box.width() / 4);
          refine_enclosure(roots[j], roots[j].box.width() / 4);
          again = true;
        }
      }
    if (!again) break;
    if (guard > 300) throw std::runtime_error("isolate_roots: enclosure separation stalled");
  }
  // Canonical order: ascending (real part, imaginary part). All boxes are pairwise
  // disjoint, so overlapping real-part enclosures force disjoint imaginary parts.
  // Real parts closer than the ordering width are treated as equal, matching the
  // fixed-precision sorting canon; genuinely distinct real parts of desk-scale
  // integer polynomials separate far above it.
  Rational order_width = std::min(precision, Rational(1, Int(1) << 100));
  for (auto& r : roots) refine_enclosure(r, order_width);
  std::sort(roots.begin(), roots.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
    if (a.box.re.hi < b.box.re.lo) return true;
    if (b.box.re.hi < a.box.re.lo) return false;
    return a.box.im.hi < b.box.im.lo;
  });
  return roots;
}

}  // namespace ap
