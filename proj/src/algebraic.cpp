#include "ap/algebraic.hpp"

#include <map>

namespace ap {

namespace {

const Rational kTol12 = Rational(1, Int(1) << 40);  // ~9e-13

/// Conjugation-closed subsets of the root list: real roots are single slots,
/// complex roots enter as (root, conjugate) pair slots.
struct FactorSlots {
  std::vector<int> singles;                  // indices of real roots
  std::vector<std::pair<int, int>> pairs;    // conjugate pair indices
};

FactorSlots build_slots(const std::vector<RootEnclosure>& roots) {
  FactorSlots s;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    if (roots[i].real) {
      s.singles.push_back((int)i);
      used[i] = true;
      continue;
    }
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j] || roots[j].real) continue;
      if (roots[j].box.conj().disjoint(roots[i].box)) continue;
      s.pairs.push_back({(int)i, (int)j});
      used[i] = used[j] = true;
      break;
    }
    if (!used[i]) throw std::logic_error("build_slots: unpaired complex root");
  }
  return s;
}

/// Product of (x - root) over the chosen slots, with box coefficients.
std::vector<QBox> subset_poly(const std::vector<RootEnclosure>& roots,
                              const std::vector<int>& singles,
                              const std::vector<std::pair<int, int>>& pairs) {
  std::vector<QBox> poly{QBox{QInterval(Rational(1)), QInterval(Rational(0))}};
  auto mul_linear = [&poly](const QBox& root) {
    std::vector<QBox> next(poly.size() + 1, QBox{QInterval(Rational(0)), QInterval(Rational(0))});
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      QBox t = poly[i] * root;
      next[i] = next[i] - t;
    }
    poly = std::move(next);
  };
  for (int i : singles) mul_linear(roots[i].box);
  for (auto& [a, b] : pairs) {
    mul_linear(roots[a].box);
    mul_linear(roots[b].box);
  }
  return poly;
}

}  // namespace

std::string to_string(NumberClass c) {
  switch (c) {
    case NumberClass::Pisot: return "Pisot";
    case NumberClass::Salem: return "Salem";
    case NumberClass::Perron: return "Perron";
    case NumberClass::Lind: return "Lind";
    case NumberClass::None: return "None";
  }
  return "None";
}

bool is_irreducible(const ZPoly& monic) {
  if (!monic.monic()) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  int n = monic.degree();
  if (n < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  if (n == 1) return true;
  if (n > 12)
    throw std::invalid_argument("is_irreducible: trial factorization capped at degree 12");
  if (monic.c[0] == 0) return false;  // x divides
  auto sf = squarefree_decomposition(monic);
  if (sf.size() != 1 || sf[0].second != 1) return false;
  auto roots = isolate_roots(monic, Rational(1, Int(1) << 30));
  // Refine until every elementary-symmetric box is narrower than 1/3, so each
  // candidate coefficient pins at most one integer.
  for (int round = 0; round < 60; ++round) {
    FactorSlots slots = build_slots(roots);
    int nslots = (int)slots.singles.size() + (int)slots.pairs.size();
    bool sharp = true;
    for (long mask = 1; mask + 1 < (1L << nslots) && sharp; ++mask) {
      std::vector<int> singles;
      std::vector<std::pair<int, int>> pairs;
      int degree = 0;
      for (int b = 0; b < nslots; ++b) {
        if (!(mask >> b & 1)) continue;
        if (b < (int)slots.singles.size()) {
          singles.push_back(slots.singles[b]);
          degree += 1;
        } else {
          pairs.push_back(slots.pairs[b - slots.singles.size()]);
          degree += 2;
        }
      }
      if (degree == 0 || degree > n / 2) continue;
      auto boxes = subset_poly(roots, singles, pairs);
      std::vector<Int> cand(boxes.size());
      bool viable = true;
      for (size_t k = 0; k < boxes.size() && viable; ++k) {
        if (!boxes[k].im.contains_zero()) {
          viable = false;
          break;
        }
        if (boxes[k].re.width() >= Rational(1, 3)) {
          sharp = false;
          break;
        }
        Int lo = ceil_rat(boxes[k].re.lo), hi = floor_rat(boxes[k].re.hi);
        if (lo > hi) {
          viable = false;
          break;
        }
        cand[k] = lo;  // unique by sharpness
      }
      if (!sharp) break;
      if (!viable) continue;
      ZPoly candidate((std::vector<Int>(cand)));
      if (candidate.degree() < 1) continue;
      auto [q, r] = divmod(to_qpoly(monic), to_qpoly(candidate));
      (void)q;
      if (r.is_zero()) return false;
    }
    if (sharp) return true;
    for (auto& r : roots) refine_enclosure(r, r.box.width() / 16);
  }
  throw std::runtime_error("is_irreducible: coefficient boxes failed to sharpen");
}

AlgebraicInteger make_algebraic_integer(const ZPoly& p, int root_index) {
  if (!p.monic()) throw std::invalid_argument("algebraic integer: polynomial must be monic");
  if (p.degree() < 1) throw std::invalid_argument("algebraic integer: degree must be >= 1");
  if (!is_irreducible(p))
    throw std::invalid_argument("algebraic integer: polynomial must be irreducible (got " +
                                poly_to_string(p) + ")");
  AlgebraicInteger a;
  a.minpoly = p;
  a.roots = isolate_roots(p, kTol12);
  if (root_index < 0 || root_index >= (int)a.roots.size())
    throw std::invalid_argument("algebraic integer: root index out of range");
  a.root_index = root_index;
  return a;
}

AlgebraicInteger make_largest_real_root(const ZPoly& p) {
  AlgebraicInteger a = make_algebraic_integer(p, 0);
  int best = -1;
  for (int i = 0; i < (int)a.roots.size(); ++i)
    if (a.roots[i].real) best = i;  // canonical order ascends in real part
  if (best < 0) throw std::invalid_argument("polynomial has no real root");
  a.root_index = best;
  return a;
}

namespace {

/// Refinable enclosure of a point on the unit circle.
struct CirclePoint {
  bool exact = false;
  Rational exact_value;        // +1 or -1
  RootEnclosure w;             // real root of the reduced polynomial, in (-2,2)
  int half = +1;               // upper or lower semicircle

  QBox box() const {
    if (exact) return QBox{QInterval{exact_value, exact_value}, QInterval{Rational(0), Rational(0)}};
    QInterval wi = w.box.re;
    QInterval re = Rational(1, 2) * wi;
    QInterval w2 = wi * wi;
    Rational lo2 = 1 - w2.hi / 4, hi2 = 1 - w2.lo / 4;
    if (lo2 < 0) lo2 = 0;
    Rational tol = wi.width() / 4 + Rational(1, Int(1) << 80);
    QInterval im_lo = sqrt_enclosure(lo2, tol), im_hi = sqrt_enclosure(hi2, tol);
    QInterval im{im_lo.lo, im_hi.hi};
    return half > 0 ? QBox{re, im} : QBox{re, -im};
  }
  void refine() {
    if (!exact) refine_enclosure(w, w.box.width() / 16);
  }
};

std::vector<CirclePoint> unit_circle_points(const ZPoly& squarefree) {
  std::vector<CirclePoint> out;
  QPoly g = gcd(to_qpoly(squarefree), to_qpoly(reverse_poly(squarefree)));
  if (g.degree() < 1) return out;
  ZPoly gz = primitive_part(g);
  for (Rational v : {Rational(1), Rational(-1)}) {
    if (to_qpoly(gz).eval(v) == 0) {
      CirclePoint cp;
      cp.exact = true;
      cp.exact_value = v;
      out.push_back(cp);
      auto [q, r] = divmod(to_qpoly(gz), QPoly(std::vector<Rational>{-v, Rational(1)}));
      if (!r.is_zero()) throw std::logic_error("unit_circle_points: linear division failed");
      gz = primitive_part(q);
    }
  }
  if (gz.degree() < 1) return out;
  if (!(reverse_poly(gz) == gz))
    throw std::logic_error("unit_circle_points: inversion-closed factor not self-reciprocal");
  ZPoly q = self_reciprocal_reduce(gz);
  auto qroots = isolate_roots(q, Rational(1, Int(1) << 40));
  for (auto& r : qroots) {
    if (!r.real) continue;
    // Keep w strictly inside (-2, 2); endpoints are excluded since gz(+-1) != 0.
    while (r.box.re.contains(Rational(2)) || r.box.re.contains(Rational(-2)))
      refine_enclosure(r, r.box.width() / 16);
    if (r.box.re.hi <= -2 || r.box.re.lo >= 2) continue;
    for (int half : {-1, +1}) {
      CirclePoint cp;
      cp.w = r;
      cp.half = half;
      out.push_back(cp);
    }
  }
  return out;
}

/// Index of the unique enclosure containing the target refinable point. The target
/// is known to be a root, so at least one enclosure always intersects it.
template <class RefineTarget>
int match_unique(std::vector<RootEnclosure>& roots, RefineTarget& target) {
  for (int round = 0; round < 120; ++round) {
    QBox tb = target.box();
    std::vector<int> hits;
    for (int i = 0; i < (int)roots.size(); ++i)
      if (!roots[i].box.disjoint(tb)) hits.push_back(i);
    if (hits.size() == 1) return hits[0];
    if (hits.empty()) throw std::logic_error("match_unique: target escaped all enclosures");
    for (int i : hits) refine_enclosure(roots[i], roots[i].box.width() / 16);
    target.refine();
  }
  throw std::runtime_error("match_unique: failed to separate enclosures");
}

ZPoly ratio_polynomial(const ZPoly& p) {
  int s = p.degree();
  int deg = s * s;
  // Interpolate T(t) = Res_y(p(y), p(t*y)) at integers t != 0.
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int k = 1; (int)xs.size() <= deg; ++k) {
    for (int t : {k, -k}) {
      if ((int)xs.size() > deg) break;
      std::vector<Int> ct(s + 1);
      Int tp = 1;
      for (int i = 0; i <= s; ++i) {
        ct[i] = p.c[i] * tp;
        tp *= t;
      }
      xs.push_back(Rational(t));
      ys.push_back(Rational(resultant(p, ZPoly(std::move(ct)))));
    }
  }
  QPoly acc = interpolate(xs, ys);
  for (auto& c : acc.c)
    if (denominator(c) != 1) throw std::logic_error("ratio_polynomial: non-integer coefficient");
  std::vector<Int> zc(acc.c.size());
  for (size_t i = 0; i < acc.c.size(); ++i) zc[i] = numerator(acc.c[i]);
  return ZPoly(std::move(zc));
}

}  // namespace

std::vector<int> unit_circle_indices(const ZPoly& squarefree, std::vector<RootEnclosure>& roots) {
  std::vector<int> out;
  auto pts = unit_circle_points(squarefree);
  for (auto& cp : pts) out.push_back(match_unique(roots, cp));
  std::sort(out.begin(), out.end());
  return out;
}

bool modulus_equal(const ZPoly& p, std::vector<RootEnclosure>& roots, int i, int j) {
  if (i == j) return true;
  ZPoly t = squarefree_part(ratio_polynomial(p));
  auto troots = isolate_roots(t, Rational(1, Int(1) << 30));
  auto circle = unit_circle_indices(t, troots);
  // The exact ratio roots[i]/roots[j] is one of t's roots; identify it.
  struct QuotientTarget {
    std::vector<RootEnclosure>* roots;
    int i, j;
    QBox box() const { return box_div((*roots)[i].box, (*roots)[j].box); }
    void refine() {
      refine_enclosure((*roots)[i], (*roots)[i].box.width() / 16);
      refine_enclosure((*roots)[j], (*roots)[j].box.width() / 16);
    }
  } target{&roots, i, j};
  int k = match_unique(troots, target);
  return std::binary_search(circle.begin(), circle.end(), k);
}

Classification classify(const AlgebraicInteger& a) {
  AlgebraicInteger work = a;
  if (!work.selected().real) throw std::invalid_argument("classify: selected root is not real");
  // Decide value > 1 exactly.
  {
    auto& r = work.selected();
    while (r.box.re.contains(Rational(1)) && r.box.width() > 0)
      refine_enclosure(r, r.box.width() / 16);
    if (r.box.re.hi <= 1) throw std::invalid_argument("classify: root must exceed 1");
  }
  Classification out;
  if (work.degree() == 1) {
    out.cls = NumberClass::Pisot;  // rational integers n >= 2: vacuous conjugate condition
    out.max_conjugate_modulus = QInterval{Rational(0), Rational(0)};
    return out;
  }
  int s = (int)work.roots.size();
  int sel_idx = work.root_index;
  std::vector<int> circle;
  bool circle_done = false;
  enum Side { LT, EQ, GT };
  auto side_vs_one = [&](int idx) -> Side {
    for (int round = 0; round < 90; ++round) {
      QInterval a2 = work.roots[idx].box.abs2();
      if (a2.hi < 1) return LT;
      if (a2.lo > 1) return GT;
      if (!circle_done) {
        circle = unit_circle_indices(work.minpoly, work.roots);
        circle_done = true;
        out.used_exact_tiebreak = true;
      }
      if (std::binary_search(circle.begin(), circle.end(), idx)) return EQ;
      refine_enclosure(work.roots[idx], work.roots[idx].box.width() / 16);
    }
    throw std::runtime_error("classify: |conjugate| vs 1 undecided (bug)");
  };
  auto side_vs_eta = [&](int idx) -> Side {
    for (int round = 0; round < 90; ++round) {
      QInterval a2 = work.roots[idx].box.abs2();
      QInterval e2 = work.roots[sel_idx].box.abs2();
      if (a2.hi < e2.lo) return LT;
      if (a2.lo > e2.hi) return GT;
      if (round >= 2) {
        out.used_exact_tiebreak = true;
        if (modulus_equal(work.minpoly, work.roots, idx, sel_idx)) return EQ;
      }
      refine_enclosure(work.roots[idx], work.roots[idx].box.width() / 16);
      refine_enclosure(work.roots[sel_idx], work.roots[sel_idx].box.width() / 16);
    }
    throw std::runtime_error("classify: |conjugate| vs eta undecided (bug)");
  };
  bool all_lt_1 = true, some_eq_1 = false, all_le_1 = true;
  bool all_lt_eta = true, some_eq_eta = false, all_le_eta = true;
  for (int idx = 0; idx < s; ++idx) {
    if (idx == sel_idx) continue;
    Side s1 = side_vs_one(idx);
    if (s1 != LT) all_lt_1 = false;
    if (s1 == EQ) some_eq_1 = true;
    if (s1 == GT) all_le_1 = false;
    Side se = (s1 != GT) ? LT : side_vs_eta(idx);  // |conj| <= 1 < eta short-circuits
    if (se != LT) all_lt_eta = false;
    if (se == EQ) some_eq_eta = true;
    if (se == GT) all_le_eta = false;
  }
  if (all_lt_1) out.cls = NumberClass::Pisot;
  else if (all_le_1 && some_eq_1) out.cls = NumberClass::Salem;
  else if (all_lt_eta) out.cls = NumberClass::Perron;
  else if (all_le_eta && some_eq_eta) out.cls = NumberClass::Lind;
  else out.cls = NumberClass::None;
  // Certified conjugate moduli at 1e-12.
  Rational tol = Rational(1, Int(1) << 44);
  QInterval maxmod{Rational(0), Rational(0)};
  for (int idx = 0; idx < s; ++idx) {
    if (idx == sel_idx) continue;
    refine_enclosure(work.roots[idx], tol);
    QInterval m = work.roots[idx].box.abs_enclosure(tol);
    out.conjugate_moduli.push_back(m);
    if (m.hi > maxmod.hi) maxmod = m;
  }
  out.max_conjugate_modulus = maxmod;
  return out;
}

PisotFamilyResult pisot_family_check(const std::vector<AlgebraicInteger>& family) {
  if (family.empty()) throw std::invalid_argument("pisot_family_check: empty family");
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (family[i].same_number(family[j]))
        throw std::invalid_argument("pisot_family_check: members must be distinct");
  PisotFamilyResult res;
  for (size_t m = 0; m < family.size(); ++m) {
    AlgebraicInteger work = family[m];
    std::vector<int> circle;
    bool circle_done = false;
    for (int idx = 0; idx < (int)work.roots.size(); ++idx) {
      if (idx == work.root_index) continue;
      bool in_family = false;
      for (const auto& f : family)
        if (f.minpoly == work.minpoly && f.root_index == idx) in_family = true;
      if (in_family) continue;
      // Need |conjugate| < 1, decided exactly.
      bool less = false;
      for (int round = 0; round < 90; ++round) {
        QInterval a2 = work.roots[idx].box.abs2();
        if (a2.hi < 1) {
          less = true;
          break;
        }
        if (a2.lo > 1) break;
        if (!circle_done) {
          circle = unit_circle_indices(work.minpoly, work.roots);
          circle_done = true;
        }
        if (std::binary_search(circle.begin(), circle.end(), idx)) break;  // modulus exactly 1
        refine_enclosure(work.roots[idx], work.roots[idx].box.width() / 16);
      }
      if (!less) {
        res.is_family = false;
        res.witness = std::make_pair((int)m, idx);
        return res;
      }
    }
  }
  res.is_family = true;
  return res;
}

KSAdmissibilityResult ks_admissibility(
    const std::vector<std::pair<AlgebraicInteger, int>>& spectrum) {
  KSAdmissibilityResult res;
  for (const auto& [lam, mult] : spectrum) {
    if (mult < 1) throw std::invalid_argument("ks_admissibility: multiplicity must be >= 1");
    AlgebraicInteger work = lam;
    auto& r = work.selected();
    for (int round = 0;; ++round) {
      QInterval a2 = r.box.abs2();
      if (a2.lo > 1) break;
      if (a2.hi < 1)
        throw std::invalid_argument("ks_admissibility: spectrum member with modulus < 1");
      std::vector<int> circle = unit_circle_indices(work.minpoly, work.roots);
      if (std::binary_search(circle.begin(), circle.end(), work.root_index))
        throw std::invalid_argument("ks_admissibility: spectrum member with modulus 1");
      refine_enclosure(r, r.box.width() / 16);
      if (round > 90) throw std::runtime_error("ks_admissibility: modulus check stalled");
    }
  }
  res.admissible = true;
  for (const auto& [lam, mult] : spectrum) {
    AlgebraicInteger work = lam;
    for (int idx = 0; idx < (int)work.roots.size(); ++idx) {
      if (idx == work.root_index) continue;
      int present_mult = 0;
      for (const auto& [other, om] : spectrum)
        if (other.minpoly == work.minpoly && other.root_index == idx) present_mult += om;
      if (present_mult >= mult) continue;
      // Need |conjugate| < |lambda| exactly.
      bool less = false;
      for (int round = 0; round < 90; ++round) {
        QInterval a2 = work.roots[idx].box.abs2();
        QInterval e2 = work.roots[work.root_index].box.abs2();
        if (a2.hi < e2.lo) {
          less = true;
          break;
        }
        if (a2.lo > e2.hi) break;
        if (round >= 2 && modulus_equal(work.minpoly, work.roots, idx, work.root_index)) break;
        refine_enclosure(work.roots[idx], work.roots[idx].box.width() / 16);
        refine_enclosure(work.roots[work.root_index],
                         work.roots[work.root_index].box.width() / 16);
      }
      if (!less) {
        res.admissible = false;
        res.failures.push_back("conjugate #" + std::to_string(idx) + " of " +
                               poly_to_string(work.minpoly) + " (selected root #" +
                               std::to_string(work.root_index) +
                               ") has modulus >= the member but multiplicity " +
                               std::to_string(present_mult) + " < " + std::to_string(mult));
      }
    }
  }
  return res;
}

std::vector<std::vector<Int>> companion_matrix(const ZPoly& monic) {
  if (!monic.monic()) throw std::invalid_argument("companion_matrix: not monic");
  int s = monic.degree();
  std::vector<std::vector<Int>> m(s, std::vector<Int>(s, Int(0)));
  for (int i = 0; i + 1 < s; ++i) m[i + 1][i] = 1;
  for (int i = 0; i < s; ++i) m[i][s - 1] = -monic.c[i];
  return m;
}

PowerMod1Result power_mod1(const AlgebraicInteger& a, const std::vector<Rational>& x, int N) {
  if (!a.selected().real) throw std::invalid_argument("power_mod1: base must be real");
  AlgebraicInteger work = a;
  {
    auto& r = work.selected();
    while (r.box.re.contains(Rational(1)))
      refine_enclosure(r, r.box.width() / 16);
    if (r.box.re.hi <= 1) throw std::invalid_argument("power_mod1: base must exceed 1");
  }
  int s = work.degree();
  if ((int)x.size() != s) throw std::invalid_argument("power_mod1: coordinate length mismatch");
  Int den = 1;
  for (const auto& q : x) den = boost::multiprecision::lcm(den, denominator(q));
  std::vector<Int> v(s);
  for (int i = 0; i < s; ++i) v[i] = numerator(x[i] * Rational(den));
  PowerMod1Result res;
  const Rational target(1, Int(1) << 40);
  for (int n = 0; n <= N; ++n) {
    res.coordinates.push_back(v);
    // Certified value of (sum_i v_i beta^i) / den.
    std::vector<Rational> qc(s);
    for (int i = 0; i < s; ++i) qc[i] = Rational(v[i], den);
    QPoly val(std::move(qc));
    QInterval iv = eval_interval(val, work.selected().box.re);
    int guard = 0;
    while (iv.width() > target) {
      refine_enclosure(work.selected(), work.selected().box.width() / 16);
      iv = eval_interval(val, work.selected().box.re);
      if (++guard > 80) throw std::runtime_error("power_mod1: precision exhaustion");
    }
    Rational mid = iv.mid();
    Rational dist = abs_rat(mid - Rational(round_rat(mid)));
    res.distances.push_back(to_double(dist));
    // Advance: v <- M v, the exact companion recurrence.
    std::vector<Int> w(s);
    for (int r = 0; r < s; ++r) {
      Int acc = r >= 1 ? v[r - 1] : Int(0);
      acc -= work.minpoly.c[r] * v[s - 1];
      w[r] = acc;
    }
    v = std::move(w);
  }
  return res;
}

}  // namespace ap
