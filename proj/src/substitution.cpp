#include "ap/substitution.hpp"

#include <map>
#include <set>
#include <sstream>

namespace ap {

namespace {

/// Certified moduli of the eigenvalues of Q, matched inside the eigenvalue
/// enclosures of the induced integer matrix (they are a subset by exactness of
/// Q V = V M). Matching uses double approximations against certified enclosures.
std::vector<double> q_eigen_lower_moduli(const FieldMatrix& Q, const IMat& M) {
  int d = Q.rows;
  Eigen::MatrixXd Qd(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) Qd(r, c) = Q.at(r, c).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(Qd);
  ZPoly cp = char_poly(M);
  auto enclosures = isolate_roots(cp, Rational(1, Int(1) << 48));
  std::vector<double> lows;
  for (int i = 0; i < d; ++i) {
    std::complex<double> ev = es.eigenvalues()(i);
    int best = -1;
    double best_d = 0;
    for (int k = 0; k < (int)enclosures.size(); ++k) {
      double dd = std::hypot(ev.real() - enclosures[k].approx_re(),
                             ev.imag() - enclosures[k].approx_im());
      if (best < 0 || dd < best_d) {
        best = k;
        best_d = dd;
      }
    }
    if (best < 0 || best_d > 1e-6)
      throw std::runtime_error("expansion eigenvalue did not match the induced matrix spectrum");
    QInterval a2 = enclosures[best].box.abs2();
    lows.push_back(std::sqrt(std::max(0.0, to_double(a2.lo))));
  }
  return lows;
}

std::string point_key(const IVec& v) {
  std::string k;
  for (int i = 0; i < v.size(); ++i) k += Int(v(i)).str() + ",";
  return k;
}

}  // namespace

MSetSubstitution MSetSubstitution::create(FramePtr frame, FieldMatrix Q, int colors,
                                          std::vector<std::vector<std::vector<IVec>>> digits) {
  if (colors < 1) throw std::invalid_argument("substitution: need at least one color");
  if ((int)digits.size() != colors)
    throw std::invalid_argument("substitution: digit matrix must be m x m");
  for (auto& row : digits)
    if ((int)row.size() != colors)
      throw std::invalid_argument("substitution: digit matrix must be m x m");
  MSetSubstitution sub;
  sub.frame = std::move(frame);
  sub.M = induced_integer_matrix(Q, sub.frame->V());
  sub.Q = std::move(Q);
  sub.m = colors;
  for (auto& row : digits)
    for (auto& cell : row)
      for (auto& a : cell)
        if (a.size() != sub.frame->s())
          throw std::invalid_argument("substitution: digit coordinate arity mismatch");
  sub.digits = std::move(digits);
  auto lows = q_eigen_lower_moduli(sub.Q, sub.M);
  double mn = 1e300;
  for (double v : lows) mn = std::min(mn, v);
  sub.min_expansion_ = mn;
  if (!(mn > 1.0))
    throw std::invalid_argument("substitution: expansion map must have all |eigenvalues| > 1");
  return sub;
}

IMat MSetSubstitution::substitution_matrix() const {
  IMat S(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) S(i, j) = (long)digits[i][j].size();
  return S;
}

IVec MSetSubstitution::map_point(const IVec& n, const IVec& digit) const {
  IVec out = digit;
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c)
      if (n(c) != 0 && M(r, c) != 0) out(r) += M(r, c) * n(c);
  return out;
}

double MSetSubstitution::max_digit_norm() const {
  double mx = 0;
  for (auto& row : digits)
    for (auto& cell : row)
      for (auto& a : cell) mx = std::max(mx, frame->position(a).norm());
  return mx;
}

PhiResult apply_phi(const MSetSubstitution& sub, const MSet& input, int k, bool strict) {
  if (k < 1) throw std::invalid_argument("apply_phi: power must be >= 1");
  if (!input.frame->same_frame(*sub.frame))
    throw std::invalid_argument("apply_phi: input frame mismatch");
  PhiResult res;
  MSet cur = input;
  for (int step = 0; step < k; ++step) {
    MSet next = MSet::empty(sub.frame, sub.m);
    for (int i = 0; i < sub.m; ++i) {
      std::set<std::string> seen;
      for (int j = 0; j < sub.m; ++j) {
        for (const auto& a : sub.digits[i][j]) {
          for (const auto& n : cur.points[j]) {
            IVec img = sub.map_point(n, a);
            if (!seen.insert(point_key(img)).second) {
              res.had_overlap = true;
              std::ostringstream os;
              os << "color " << (i + 1) << ": duplicate point from branch (" << (i + 1) << ","
                 << (j + 1) << ") at coordinates " << point_key(img);
              res.overlaps.push_back(os.str());
              if (strict)
                throw std::domain_error("apply_phi: union terms overlap; " + res.overlaps.back());
              continue;
            }
            next.points[i].push_back(img);
          }
        }
      }
      std::sort(next.points[i].begin(), next.points[i].end(), ivec_less);
    }
    cur = std::move(next);
  }
  res.set = std::move(cur);
  return res;
}

ValidationReport validate(const MSetSubstitution& sub, const MSet& seed, const BoxD& window) {
  ValidationReport rep;
  rep.q_expanding = sub.min_expansion() > 1.0;
  rep.spectral = pf_analysis(sub.substitution_matrix());
  FieldElem det = sub.Q.determinant();
  QInterval det_iv = det.value_interval(Rational(1, Int(1) << 48)).abs();
  rep.det_q_abs = to_double(det_iv.mid());
  // Certified upper bound for |lambda(S) - |det Q||.
  {
    QInterval diff = rep.spectral.pf_enclosure - det_iv;
    rep.pf_det_gap = to_double(diff.mag());
  }
  rep.pf_det_ok = rep.pf_det_gap < 1e-9;
  // Disjointness of the defining union on iterates of the seed.
  MSet cur = seed;
  for (int it = 1; it <= 2; ++it) {
    auto phi = apply_phi(sub, cur, 1, /*strict=*/false);
    if (phi.had_overlap) {
      rep.disjoint = false;
      for (auto& v : phi.overlaps) {
        rep.violations.push_back("iteration " + std::to_string(it) + ": " + v);
        if (rep.violations.size() > 20) break;
      }
    }
    cur = phi.set.restrict(window.scaled_about_center(4.0), 1e-9);
  }
  rep.report.put("q_expanding", rep.q_expanding);
  rep.report.put("min_expansion", sub.min_expansion());
  rep.report.put("primitive", rep.spectral.primitive);
  rep.report.put("primitivity_exponent", rep.spectral.primitivity_exponent);
  rep.report.put("pf_eigenvalue", rep.spectral.pf_value);
  rep.report.put("abs_det_q", rep.det_q_abs);
  rep.report.put("pf_det_gap", rep.pf_det_gap);
  rep.report.put("pf_det_ok", rep.pf_det_ok);
  rep.report.put("disjoint", rep.disjoint);
  for (size_t i = 0; i < rep.violations.size(); ++i)
    rep.report.put("violation_" + std::to_string(i), rep.violations[i]);
  rep.report.put("valid", rep.ok());
  return rep;
}

namespace {

/// Exact solution of Q x + a = x over the field, converted to integer coordinates.
std::optional<IVec> branch_fixed_point(const MSetSubstitution& sub, const IVec& digit) {
  const auto& field = sub.frame->field();
  int d = sub.frame->d(), s = sub.frame->s();
  FieldMatrix QmI = sub.Q - FieldMatrix::identity(field, d);
  std::vector<FieldElem> apos = sub.frame->position_exact(digit);
  for (auto& e : apos) e = -e;
  FieldMatrix inv = QmI.inverse();
  std::vector<FieldElem> x = inv.apply(apos);  // x = -(Q-I)^{-1} a
  // Coordinates: solve V n = x exactly, require integer n.
  int sk = field->degree();
  QMat A(d * sk, s);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < s; ++c)
      for (int kk = 0; kk < sk; ++kk) A(r * sk + kk, c) = sub.frame->V().at(r, c).coords[kk];
  QVec b(d * sk);
  for (int r = 0; r < d; ++r)
    for (int kk = 0; kk < sk; ++kk) b(r * sk + kk) = x[r].coords[kk];
  QVec n;
  try {
    n = solve_rational(A, b);
  } catch (const std::domain_error&) {
    return std::nullopt;  // fixed point not in the module
  }
  IVec out(s);
  for (int i = 0; i < s; ++i) {
    if (denominator(n(i)) != 1) return std::nullopt;
    out(i) = numerator(n(i));
  }
  return out;
}

}  // namespace

GeneratingCluster find_generating_cluster(const MSetSubstitution& sub) {
  // One-point seeds: x with Q x + a = x for a in D_cc.
  for (int c = 0; c < sub.m; ++c)
    for (const auto& a : sub.digits[c][c]) {
      auto n = branch_fixed_point(sub, a);
      if (!n) continue;
      Cluster p = MSet::empty(sub.frame, sub.m);
      p.insert(c, *n);
      auto phi = apply_phi(sub, p, 1, /*strict=*/false);
      if (is_subcluster(p, phi.set)) return {p};
    }
  // Two-point clusters from all branch fixed points within the search radius.
  double radius = 2.0 * sub.max_digit_norm() / (sub.min_expansion() - 1.0) + 1e-9;
  std::vector<IVec> cands;
  std::set<std::string> seen;
  for (int i = 0; i < sub.m; ++i)
    for (int j = 0; j < sub.m; ++j)
      for (const auto& a : sub.digits[i][j]) {
        auto n = branch_fixed_point(sub, a);
        if (!n) continue;
        if (sub.frame->position(*n).norm() > radius) continue;
        if (seen.insert(point_key(*n)).second) cands.push_back(*n);
      }
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = 0; j < cands.size(); ++j)
      for (int ci = 0; ci < sub.m; ++ci)
        for (int cj = 0; cj < sub.m; ++cj) {
          if (i == j && ci == cj) continue;
          Cluster p = MSet::empty(sub.frame, sub.m);
          p.insert(ci, cands[i]);
          p.insert(cj, cands[j]);
          auto phi = apply_phi(sub, p, 1, /*strict=*/false);
          if (is_subcluster(p, phi.set)) return {p};
        }
  throw std::runtime_error(
      "find_generating_cluster: no one- or two-point generating cluster found within the "
      "search bounds (not a proof of nonexistence)");
}

LegalityResult is_legal(const MSetSubstitution& sub, const Cluster& p, int k_max) {
  LegalityResult res;
  if (p.is_empty()) {
    res.legal = true;
    res.translation = IVec::Zero(sub.frame->s());
    res.power = 0;
    return res;
  }
  GeneratingCluster g = find_generating_cluster(sub);
  // Representative seed points of the fixed point: a small iterate of the
  // generating cluster. Any of its points lies in the fixed point.
  auto rep = apply_phi(sub, g.cluster, 2, /*strict=*/false).set;
  int c0 = 0;
  while (p.points[c0].empty()) ++c0;
  const IVec& anchor = p.points[c0][0];
  for (int k = 1; k <= k_max; ++k) {
    for (int color = 0; color < sub.m; ++color) {
      std::set<std::string> tried;
      for (const auto& seed_pt : rep.points[color]) {
        if (!tried.insert(point_key(seed_pt)).second) continue;
        Cluster single = MSet::empty(sub.frame, sub.m);
        single.insert(color, seed_pt);
        MSet image = apply_phi(sub, single, k, /*strict=*/false).set;
        for (const auto& q : image.points[c0]) {
          IVec t = q - anchor;
          bool all = true;
          for (int c = 0; c < p.colors() && all; ++c)
            for (const auto& pt : p.points[c])
              if (!image.contains(c, IVec(pt + t))) {
                all = false;
                break;
              }
          if (all) {
            res.legal = true;
            res.color = color;
            res.power = k;
            res.translation = t;
            return res;
          }
        }
      }
    }
  }
  return res;
}

MSet generate_patch(const MSetSubstitution& sub, const GeneratingCluster& seed,
                    const BoxD& region) {
  // Clip radius: points farther out can never send images back into the region.
  double maxd = sub.max_digit_norm();
  double sigma = sub.min_expansion();
  double region_radius = 0;
  for (int i = 0; i < region.dim(); ++i)
    region_radius = std::max(region_radius,
                             std::max(std::abs(region.lo(i)), std::abs(region.hi(i))));
  double clip = std::max(region_radius + maxd + 1.0, (region_radius + maxd) / (sigma - 1) + 1.0);
  BoxD clipbox;
  clipbox.lo = Eigen::VectorXd::Constant(region.dim(), -clip);
  clipbox.hi = Eigen::VectorXd::Constant(region.dim(), clip);

  MSet cur = seed.cluster;
  MSet prev_restricted = cur.restrict(region, 1e-9);
  int d = region.dim();
  Eigen::VectorXd prev_hull_lo, prev_hull_hi;
  int stall = 0;
  for (int it = 0; it < 64; ++it) {
    cur = apply_phi(sub, cur, 1, /*strict=*/true).set.restrict(clipbox, 1e-9);
    Eigen::VectorXd hull_lo = Eigen::VectorXd::Constant(d, 1e300);
    Eigen::VectorXd hull_hi = Eigen::VectorXd::Constant(d, -1e300);
    for (const auto& n : cur.support()) {
      Eigen::VectorXd p = sub.frame->position(n);
      for (int a = 0; a < d; ++a) {
        hull_lo(a) = std::min(hull_lo(a), p(a));
        hull_hi(a) = std::max(hull_hi(a), p(a));
      }
    }
    bool covered = true;
    for (int a = 0; a < d; ++a)
      if (hull_lo(a) > region.lo(a) + 1e-9 || hull_hi(a) < region.hi(a) - 1e-9) covered = false;
    MSet now = cur.restrict(region, 1e-9);
    if (covered && now == prev_restricted && now.total_points() > 0) return now;
    prev_restricted = std::move(now);
    bool hull_grew = it == 0;
    if (it > 0)
      for (int a = 0; a < d; ++a)
        if (hull_lo(a) < prev_hull_lo(a) - 1e-12 || hull_hi(a) > prev_hull_hi(a) + 1e-12)
          hull_grew = true;
    if (!covered && !hull_grew) {
      if (++stall >= 3) {
        std::ostringstream os;
        os << "generate_patch: region never covered; covered sub-region";
        for (int a = 0; a < d; ++a)
          os << " [" << std::max(hull_lo(a), region.lo(a)) << ", "
             << std::min(hull_hi(a), region.hi(a)) << "]";
        throw std::domain_error(os.str());
      }
    } else {
      stall = 0;
    }
    prev_hull_lo = hull_lo;
    prev_hull_hi = hull_hi;
  }
  throw std::runtime_error("generate_patch: iteration cap reached before stabilization");
}

RepetitivityResult repetitivity_probe(const MSet& patch, double T) {
  RepetitivityResult res;
  auto support = patch.support();
  if (support.empty()) throw std::invalid_argument("repetitivity_probe: empty patch");
  std::vector<Eigen::VectorXd> pos;
  for (auto& n : support) pos.push_back(patch.frame->position(n));
  double lo = 1e300, hi = -1e300;
  for (auto& p : pos) {
    lo = std::min(lo, p(0));
    hi = std::max(hi, p(0));
  }
  if (hi - lo < 10 * T) throw std::invalid_argument("repetitivity_probe: patch width below 10T");
  if (patch.frame->d() != 1)
    throw std::invalid_argument("repetitivity_probe: supported in dimension 1");
  // Cluster types anchored at patch points whose T-ball fits inside the patch.
  struct Occ {
    std::vector<Eigen::VectorXd> anchors;
  };
  std::map<std::string, Occ> types;
  double margin = T;
  for (size_t i = 0; i < support.size(); ++i) {
    if (pos[i](0) < lo + margin || pos[i](0) > hi - margin) continue;
    std::vector<std::string> rel;
    for (int c = 0; c < patch.colors(); ++c)
      for (const auto& q : patch.points[c]) {
        Eigen::VectorXd qp = patch.frame->position(q);
        if ((qp - pos[i]).norm() <= T + 1e-12) {
          std::string k = std::to_string(c) + ":";
          IVec rel_q = q - support[i];
          for (int t = 0; t < rel_q.size(); ++t) k += Int(rel_q(t)).str() + ",";
          rel.push_back(k);
        }
      }
    std::sort(rel.begin(), rel.end());
    std::string key;
    for (auto& s : rel) key += s + ";";
    types[key].anchors.push_back(pos[i]);
  }
  res.cluster_types = (long long)types.size();
  // Scan centers on a grid; M = max over centers of (distance to the farthest
  // nearest-anchor over types) + T.
  double pitch = std::max(T / 4, (hi - lo) / 4096);
  double M = 0;
  bool grows = false;
  for (double c = lo + margin; c <= hi - margin; c += pitch) {
    double worst = 0;
    for (auto& [key, occ] : types) {
      double best = 1e300;
      for (auto& a : occ.anchors) best = std::min(best, std::abs(a(0) - c));
      worst = std::max(worst, best);
    }
    M = std::max(M, worst + T);
    if (worst > (hi - lo) / 3) grows = true;
  }
  res.M = M;
  res.repetitive_consistent = !grows && res.M < (hi - lo) / 3;
  res.report.put("radius", T);
  res.report.put("cluster_types", res.cluster_types);
  res.report.put("M", res.M);
  res.report.put("note", std::string("patch-relative"));
  res.report.put("verdict",
                 std::string(res.repetitive_consistent ? "repetitive-consistent" : "inconclusive"));
  return res;
}

}  // namespace ap
