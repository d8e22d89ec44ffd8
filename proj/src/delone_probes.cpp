#include "ap/delone_probes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ap {

namespace {

struct Positioned {
  std::vector<IVec> pts;
  std::vector<Eigen::VectorXd> pos;
  std::vector<int> order;  // indices sorted by first position coordinate

  explicit Positioned(const MSet& x) {
    for (const auto& n : x.support()) {
      pts.push_back(n);
      pos.push_back(x.frame->position(n));
    }
    order.resize(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pos[a](0) < pos[b](0); });
  }

  /// Calls fn(i, j) for all ordered pairs with |pos_i - pos_j| <= radius.
  template <class Fn>
  void near_pairs(double radius, Fn&& fn) const {
    for (size_t a = 0; a < order.size(); ++a) {
      int i = order[a];
      for (size_t b = a + 1; b < order.size(); ++b) {
        int j = order[b];
        if (pos[j](0) - pos[i](0) > radius) break;
        if ((pos[i] - pos[j]).norm() <= radius) {
          fn(i, j);
          fn(j, i);
        }
      }
    }
  }

  int nearest(const Eigen::VectorXd& p, double* dist_out = nullptr) const {
    int best = -1;
    double best_d = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      double d = (pos[i] - p).norm();
      if (best < 0 || d < best_d ||
          (d == best_d && ivec_less(pts[i], pts[best]))) {
        best = (int)i;
        best_d = d;
      }
    }
    if (dist_out) *dist_out = best_d;
    return best;
  }
};

std::string key_of(const IVec& v) {
  std::string k;
  for (int i = 0; i < v.size(); ++i) {
    k += Int(v(i)).str();
    k += ",";
  }
  return k;
}

long long difference_census(const MSet& x, double T, const BoxD& window) {
  MSet xr = x.restrict(window);
  Positioned p(xr);
  std::set<std::string> diffs;
  if (!p.pts.empty()) diffs.insert(key_of(IVec::Zero(x.frame->s())));
  p.near_pairs(T + 1e-12, [&](int i, int j) { diffs.insert(key_of(p.pts[i] - p.pts[j])); });
  return (long long)diffs.size();
}

}  // namespace

std::pair<double, double> estimate_parameters(const MSet& x, const BoxD& region) {
  MSet xr = x.restrict(region);
  Positioned p(xr);
  if (p.pts.size() < 2)
    throw std::invalid_argument("estimate_parameters: need at least two points in region");
  double min_pair = 1e300;
  for (size_t a = 0; a + 1 < p.order.size(); ++a) {
    // Min pairwise distance: band scan over the first coordinate.
    int i = p.order[a];
    for (size_t b = a + 1; b < p.order.size(); ++b) {
      int j = p.order[b];
      if (p.pos[j](0) - p.pos[i](0) >= min_pair) break;
      min_pair = std::min(min_pair, (p.pos[i] - p.pos[j]).norm());
    }
  }
  double r = min_pair / 2;
  // Covering-radius estimate by grid scan at pitch r/4, excluding a boundary
  // margin (the estimate is a lower bound near the edge).
  auto scan = [&](double margin) {
    double worst = 0;
    int d = region.dim();
    double pitch = std::max(r / 4, 1e-9);
    std::vector<long> steps(d);
    long total = 1;
    for (int k = 0; k < d; ++k) {
      double w = region.width(k) - 2 * margin;
      steps[k] = std::max(1L, (long)std::floor(w / pitch));
      total *= steps[k] + 1;
      if (total > 2000000) return worst;  // desk-scale cap
    }
    std::vector<long> idx(d, 0);
    while (true) {
      Eigen::VectorXd q(d);
      for (int k = 0; k < d; ++k)
        q(k) = region.lo(k) + margin + (region.width(k) - 2 * margin) * idx[k] / steps[k];
      double dist;
      p.nearest(q, &dist);
      worst = std::max(worst, dist);
      int k = 0;
      while (k < d && ++idx[k] > steps[k]) idx[k++] = 0;
      if (k == d) break;
    }
    return worst;
  };
  double raw = scan(0.0);
  double R = scan(std::min(raw, region.min_width() / 4));
  return {r, R};
}

FiniteTypeResult finite_type_probe(const MSet& x, double T, const BoxD& window) {
  if (window.min_width() < 10 * T)
    throw std::invalid_argument("finite_type_probe: window must be at least 10T wide");
  FiniteTypeResult res;
  res.census = difference_census(x, T, window);
  res.census_half = difference_census(x, T, window.scaled_about_center(0.5));
  res.census_quarter = difference_census(x, T, window.scaled_about_center(0.25));
  res.consistent = res.census == res.census_half && res.census_half == res.census_quarter;
  // Local-cluster census at radius T, up to translation, anchors inside the
  // T-shrunk window so every ball fits.
  {
    MSet xr = x.restrict(window);
    Positioned p(xr);
    BoxD inner = window.inflated(-T);
    std::set<std::string> clusters;
    for (size_t i = 0; i < p.pts.size(); ++i) {
      if (!inner.contains(p.pos[i])) continue;
      std::vector<std::string> rel;
      for (size_t j = 0; j < p.pts.size(); ++j)
        if ((p.pos[j] - p.pos[i]).norm() <= T + 1e-12)
          rel.push_back(key_of(p.pts[j] - p.pts[i]));
      std::sort(rel.begin(), rel.end());
      std::string all;
      for (auto& s : rel) all += s + ";";
      clusters.insert(all);
    }
    res.cluster_census = (long long)clusters.size();
  }
  res.report.put("radius", T);
  res.report.put("census", res.census);
  res.report.put("census_half_window", res.census_half);
  res.report.put("census_quarter_window", res.census_quarter);
  res.report.put("local_cluster_census", res.cluster_census);
  res.report.put("verdict", std::string(res.consistent ? "finite-type-consistent" : "inconsistent"));
  return res;
}

namespace {
double min_pairwise(const Positioned& p) {
  double min_pair = 1e300;
  for (size_t a = 0; a + 1 < p.order.size(); ++a) {
    int i = p.order[a];
    for (size_t b = a + 1; b < p.order.size(); ++b) {
      int j = p.order[b];
      if (p.pos[j](0) - p.pos[i](0) >= min_pair) break;
      min_pair = std::min(min_pair, (p.pos[i] - p.pos[j]).norm());
    }
  }
  return min_pair;
}
}  // namespace

MeyerResult meyer_probe(const MSet& x, const BoxD& window) {
  MeyerResult res;
  Positioned p(x);
  double r_est = x.r ? *x.r : min_pairwise(p) / 2;
  double diag = (window.hi - window.lo).norm();
  auto f_census = [&](const BoxD& win) {
    std::set<std::string> fs;
    std::vector<IVec> flist;
    std::set<std::string> seen_z;
    p.near_pairs(diag + 1e-9, [&](int i, int j) {
      IVec z = p.pts[i] - p.pts[j];
      Eigen::VectorXd zp = p.pos[i] - p.pos[j];
      if (!win.contains(zp, 1e-9)) return;
      auto k = key_of(z);
      if (!seen_z.insert(k).second) return;
      int nearest = p.nearest(zp);
      IVec f = z - p.pts[nearest];
      if (fs.insert(key_of(f)).second) flist.push_back(f);
    });
    return flist;
  };
  auto full = f_census(window);
  auto half = f_census(window.scaled_about_center(0.5));
  auto quarter = f_census(window.scaled_about_center(0.25));
  res.f_set = full;
  std::sort(res.f_set.begin(), res.f_set.end(), ivec_less);
  // Minimum gap between distinct difference vectors.
  {
    std::vector<Eigen::VectorXd> dpos;
    std::set<std::string> seen;
    p.near_pairs(diag + 1e-9, [&](int i, int j) {
      IVec z = p.pts[i] - p.pts[j];
      Eigen::VectorXd zp = p.pos[i] - p.pos[j];
      if (!window.contains(zp, 1e-9)) return;
      if (seen.insert(key_of(z)).second) dpos.push_back(zp);
    });
    std::sort(dpos.begin(), dpos.end(),
              [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return a(0) < b(0); });
    double gap = 1e300;
    for (size_t a = 0; a < dpos.size(); ++a)
      for (size_t b = a + 1; b < dpos.size(); ++b) {
        if (dpos[b](0) - dpos[a](0) >= gap) break;
        gap = std::min(gap, (dpos[a] - dpos[b]).norm());
      }
    res.min_difference_gap = dpos.size() < 2 ? 0 : gap;
  }
  bool stable = full.size() == half.size() && half.size() == quarter.size();
  bool gap_ok = res.min_difference_gap >= r_est / 2;
  res.consistent = stable && gap_ok;
  res.report.put("f_count", (long long)full.size());
  res.report.put("f_count_half_window", (long long)half.size());
  res.report.put("f_count_quarter_window", (long long)quarter.size());
  res.report.put("min_difference_gap", res.min_difference_gap);
  res.report.put("gap_threshold", r_est / 2);
  res.report.put("verdict", std::string(res.consistent ? "Meyer-consistent" : "inconsistent"));
  return res;
}

std::vector<IVec> chain(const MSet& x, const IVec& from, const IVec& to) {
  if (!x.r || !x.R) throw std::invalid_argument("chain: point set has no declared (r, R)");
  double R = *x.R;
  Positioned p(x);
  Eigen::VectorXd a = x.frame->position(from), b = x.frame->position(to);
  double dist = (b - a).norm();
  long m = (long)std::floor(dist / (2 * R)) + 1;
  std::vector<IVec> out{from};
  for (long i = 1; i < m; ++i) {
    Eigen::VectorXd w = a + (b - a) * ((double)i / (double)m);
    double snap_dist;
    int idx = p.nearest(w, &snap_dist);
    if (snap_dist > R + 1e-9)
      throw std::domain_error(
          "chain: no point within R of a waypoint (declared R violated by the data)");
    if (!ivec_eq(p.pts[idx], out.back())) out.push_back(p.pts[idx]);
  }
  if (!ivec_eq(to, out.back())) out.push_back(to);
  return out;
}

AddressAuditResult address_audit(const MSet& x) {
  const int s = x.frame->s(), d = x.frame->d();
  Positioned p(x);
  int n = (int)p.pts.size();
  if (n < s + 1) throw std::invalid_argument("address_audit: need at least s+1 points");
  AddressAuditResult res;
  // Lipschitz constant over sampled pairs.
  long long pair_budget = 200000;
  long long total_pairs = (long long)n * (n - 1) / 2;
  long long stride = std::max(1LL, total_pairs / pair_budget);
  long long counter = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if ((counter++ % stride) != 0) continue;
      double dp = (p.pos[i] - p.pos[j]).norm();
      if (dp < 1e-12) continue;
      double dn = 0;
      for (int k = 0; k < s; ++k) dn += std::pow(to_double(Int(p.pts[i](k) - p.pts[j](k))), 2);
      res.lipschitz = std::max(res.lipschitz, std::sqrt(dn) / dp);
    }
  // Least-squares linear part N = L P.
  Eigen::MatrixXd P(d, n), N(s, n);
  for (int i = 0; i < n; ++i) {
    P.col(i) = p.pos[i];
    for (int k = 0; k < s; ++k) N(k, i) = to_double(p.pts[i](k));
  }
  Eigen::MatrixXd G = P * P.transpose();
  res.linear_part = N * P.transpose() * G.inverse();
  // Residual sup and per-dyadic-window sups by distance from the origin.
  double max_norm = 0;
  for (int i = 0; i < n; ++i) max_norm = std::max(max_norm, p.pos[i].norm());
  int levels = 6;
  res.window_sups.assign(levels, 0.0);
  for (int i = 0; i < n; ++i) {
    double resi = (N.col(i) - res.linear_part * P.col(i)).norm();
    res.residual_sup = std::max(res.residual_sup, resi);
    double t = p.pos[i].norm() / (max_norm + 1e-300);
    int lvl = levels - 1;
    for (int k = 0; k < levels; ++k)
      if (t <= std::pow(0.5, levels - 1 - k)) {
        lvl = k;
        break;
      }
    res.window_sups[lvl] = std::max(res.window_sups[lvl], resi);
  }
  // Growth flag: strictly increasing sups across the last three windows.
  int L = levels;
  bool growing = res.window_sups[L - 3] < res.window_sups[L - 2] &&
                 res.window_sups[L - 2] < res.window_sups[L - 1] &&
                 res.window_sups[L - 1] > 2 * res.window_sups[L - 3] + 1e-12;
  res.residual_bounded = !growing;
  res.report.put("points", n);
  res.report.put("lipschitz", res.lipschitz);
  res.report.put("residual_sup", res.residual_sup);
  for (int k = 0; k < levels; ++k)
    res.report.put("window_sup_" + std::to_string(k), res.window_sups[k]);
  res.report.put("residual_bounded", res.residual_bounded);
  return res;
}

Eigen::MatrixXd address_linear_by_doubling(const MSet& x, int kmax) {
  Positioned p(x);
  int s = x.frame->s(), d = x.frame->d();
  Eigen::MatrixXd L(s, d);
  for (int axis = 0; axis < d; ++axis) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(d);
    y(axis) = 1.0;
    Eigen::VectorXd phi_over_2k;
    for (int k = kmax; k >= 0; --k) {
      int idx = p.nearest(y * std::pow(2.0, k));
      if (idx < 0) throw std::invalid_argument("address_linear_by_doubling: empty set");
      Eigen::VectorXd phi(s);
      for (int i = 0; i < s; ++i) phi(i) = to_double(p.pts[idx](i));
      phi_over_2k = phi / std::pow(2.0, k);
      if ((p.pos[idx] - y * std::pow(2.0, k)).norm() <= (x.R ? *x.R : 1.0) + 1e-9) break;
    }
    L.col(axis) = phi_over_2k;
  }
  return L;
}

InflationAuditResult inflation_audit(const MSet& x, const AlgebraicInteger& eta,
                                     const BoxD& window) {
  InflationAuditResult res;
  const auto& field = x.frame->field();
  FieldElem factor = field->zero();
  if (eta.minpoly == field->generator().minpoly &&
      eta.root_index == field->selected_embedding()) {
    factor = field->gen();
  } else if (eta.degree() == 1) {
    factor = field->from_rational(-Rational(eta.minpoly.c[0]));
  } else {
    throw std::invalid_argument(
        "inflation_audit: the factor must generate the frame field or be rational");
  }
  int d = x.frame->d();
  FieldMatrix Q = FieldMatrix::zero(field, d, d);
  for (int i = 0; i < d; ++i) Q.at(i, i) = factor;
  IMat M = induced_integer_matrix(Q, x.frame->V());
  auto support = x.support();
  MSet sup = MSet::empty(x.frame, 1);
  for (auto& n : support) sup.points[0].push_back(n);
  res.inclusion_ok = true;
  for (const auto& n : support) {
    IVec img = IVec::Zero(n.size());
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < M.cols(); ++c) img(r) += M(r, c) * n(c);
    Eigen::VectorXd pos = x.frame->position(img);
    if (!window.contains(pos, -1e-9)) continue;
    if (!sup.contains(0, img)) {
      res.inclusion_ok = false;
      std::ostringstream os;
      os << "inflation_audit: eta*x missing from the set at position " << pos(0);
      throw std::domain_error(os.str());
    }
  }
  double T = window.min_width() / 10;
  auto ft = finite_type_probe(x, T, window);
  auto my = meyer_probe(x, window.scaled_about_center(0.3));
  res.finite_type_consistent = ft.consistent;
  res.meyer_consistent = my.consistent;
  res.number_class = classify(eta).cls;
  bool meyer_bad = res.meyer_consistent && !(res.number_class == NumberClass::Pisot ||
                                             res.number_class == NumberClass::Salem);
  bool ft_bad = res.finite_type_consistent && res.number_class == NumberClass::None;
  res.contradiction = meyer_bad || ft_bad;
  res.report.put("inclusion", res.inclusion_ok);
  res.report.put("finitely_generated", true);  // by the frame
  res.report.put("finite_type", std::string(ft.consistent ? "consistent" : "inconsistent"));
  res.report.put("meyer", std::string(my.consistent ? "consistent" : "inconsistent"));
  res.report.put("number_class", to_string(res.number_class));
  res.report.put("contradiction", res.contradiction);
  return res;
}

}  // namespace ap
