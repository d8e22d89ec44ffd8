#include "ap/spectral.hpp"

namespace ap {

ZPoly char_poly(const IMat& S) {
  int m = (int)S.rows();
  if (m != S.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  // Interpolate det(xI - S) at x = 0..m with exact fraction elimination.
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= m; ++t) {
    QMat A = QMat::Zero(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) A(r, c) = Rational((r == c ? Int(t) : Int(0)) - S(r, c));
    // Exact determinant.
    Rational det = 1;
    for (int col = 0; col < m; ++col) {
      int piv = -1;
      for (int r = col; r < m; ++r)
        if (A(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != col) {
        A.row(piv).swap(A.row(col));
        det = -det;
      }
      det *= A(col, col);
      Rational inv = Rational(1) / A(col, col);
      for (int r = col + 1; r < m; ++r) {
        if (A(r, col) == 0) continue;
        Rational f = A(r, col) * inv;
        for (int c = col; c < m; ++c) A(r, c) -= f * A(col, c);
      }
    }
    xs.push_back(Rational(t));
    ys.push_back(det);
  }
  QPoly p = interpolate(xs, ys);
  std::vector<Int> zc(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (denominator(p.c[i]) != 1) throw std::logic_error("char_poly: non-integer coefficient");
    zc[i] = numerator(p.c[i]);
  }
  return ZPoly(std::move(zc));
}

SpectralReport pf_analysis(const IMat& S) {
  int m = (int)S.rows();
  if (m != S.cols()) throw std::invalid_argument("pf_analysis: non-square matrix");
  if (m == 0) throw std::invalid_argument("pf_analysis: empty matrix");
  bool all_zero = true;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      if (S(r, c) < 0) throw std::invalid_argument("pf_analysis: negative entry");
      if (S(r, c) != 0) all_zero = false;
    }
  if (all_zero) throw std::invalid_argument("pf_analysis: zero matrix");

  SpectralReport rep;
  // Exact primitivity: boolean powers up to (m-1)^2 + 1.
  {
    std::vector<std::vector<bool>> b(m, std::vector<bool>(m)), p = {};
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) b[r][c] = S(r, c) > 0;
    p = b;
    int cap = (m - 1) * (m - 1) + 1;
    for (int k = 1; k <= cap; ++k) {
      bool all = true;
      for (int r = 0; r < m && all; ++r)
        for (int c = 0; c < m; ++c)
          if (!p[r][c]) {
            all = false;
            break;
          }
      if (all) {
        rep.primitive = true;
        rep.primitivity_exponent = k;
        break;
      }
      // p <- p * b (boolean)
      std::vector<std::vector<bool>> q(m, std::vector<bool>(m, false));
      for (int r = 0; r < m; ++r)
        for (int t = 0; t < m; ++t)
          if (p[r][t])
            for (int c = 0; c < m; ++c)
              if (b[t][c]) q[r][c] = true;
      p = std::move(q);
    }
  }
  ZPoly cp = char_poly(S);
  rep.eigenvalues = isolate_roots(cp, Rational(1, Int(1) << 44));
  // PF eigenvalue: the real root of maximal value (nonnegative matrix).
  int best = -1;
  for (int i = 0; i < (int)rep.eigenvalues.size(); ++i)
    if (rep.eigenvalues[i].real &&
        (best < 0 || rep.eigenvalues[i].box.re.lo > rep.eigenvalues[best].box.re.lo))
      best = i;
  if (best < 0) throw std::logic_error("pf_analysis: no real eigenvalue");
  rep.pf_index = best;
  rep.pf_enclosure = rep.eigenvalues[best].box.re;
  rep.pf_value = to_double(rep.pf_enclosure.mid());

  // Eigenvectors in double precision, unit-sum normalized.
  Eigen::MatrixXd Sd(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) Sd(r, c) = to_double(S(r, c));
  auto principal = [&](const Eigen::MatrixXd& A) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(A);
    int idx = 0;
    double bestRe = -1e300;
    for (int i = 0; i < m; ++i) {
      std::complex<double> ev = es.eigenvalues()(i);
      if (std::abs(ev.imag()) < 1e-9 && ev.real() > bestRe) {
        bestRe = ev.real();
        idx = i;
      }
    }
    Eigen::VectorXd v(m);
    for (int i = 0; i < m; ++i) v(i) = es.eigenvectors().col(idx)(i).real();
    if (v.sum() < 0) v = -v;
    double s = v.sum();
    if (s != 0) v /= s;
    return v;
  };
  rep.right = principal(Sd);
  rep.left = principal(Sd.transpose());
  rep.eigenvector_positive = true;
  for (int i = 0; i < m; ++i)
    if (!(rep.right(i) > 0) || !(rep.left(i) > 0)) rep.eigenvector_positive = false;
  if (rep.primitive && !rep.eigenvector_positive)
    throw std::logic_error("pf_analysis: primitive matrix without positive eigenvector");
  return rep;
}

QVec solve_rational(const QMat& A, const QVec& b) {
  int n = (int)A.rows(), m = (int)A.cols();
  QMat W(n, m + 1);
  W.leftCols(m) = A;
  W.col(m) = b;
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (W(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    W.row(piv).swap(W.row(rank));
    Rational inv = Rational(1) / W(rank, col);
    for (int c = col; c <= m; ++c) W(rank, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || W(r, col) == 0) continue;
      Rational f = W(r, col);
      for (int c = col; c <= m; ++c) W(r, c) -= f * W(rank, c);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < m) throw std::domain_error("solve_rational: matrix does not have full column rank");
  for (int r = rank; r < n; ++r)
    if (W(r, m) != 0) throw std::domain_error("solve_rational: inconsistent system");
  QVec x = QVec::Zero(m);
  for (int i = 0; i < rank; ++i) x(pivot_col[i]) = W(i, m);
  return x;
}

IMat induced_integer_matrix(const FieldMatrix& Q, const FieldMatrix& V) {
  if (Q.rows != Q.cols || Q.cols != V.rows)
    throw std::invalid_argument("induced_integer_matrix: shape mismatch");
  int d = V.rows, s = V.cols;
  int sk = V.field->degree();
  FieldMatrix QV = Q * V;
  // Stack field coordinates: (d*sk) x s rational system, one solve per column.
  QMat A(d * sk, s);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < s; ++c)
      for (int k = 0; k < sk; ++k) A(r * sk + k, c) = V.at(r, c).coords[k];
  IMat M(s, s);
  for (int j = 0; j < s; ++j) {
    QVec b(d * sk);
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < sk; ++k) b(r * sk + k) = QV.at(r, j).coords[k];
    QVec x = solve_rational(A, b);
    for (int i = 0; i < s; ++i) {
      if (denominator(x(i)) != 1)
        throw std::domain_error(
            "induced_integer_matrix: no integer solution (module not invariant)");
      M(i, j) = numerator(x(i));
    }
  }
  // Exact verification Q V == V M over the field.
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < s; ++j) {
      FieldElem acc = V.field->zero();
      for (int i = 0; i < s; ++i) acc = acc + Rational(M(i, j)) * V.at(r, i);
      if (!(acc == QV.at(r, j)))
        throw std::logic_error("induced_integer_matrix: verification failed");
    }
  return M;
}

}  // namespace ap
