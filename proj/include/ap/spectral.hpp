#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "ap/number_field.hpp"

namespace ap {

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact characteristic polynomial det(xI - S) by integer-point interpolation.
ZPoly char_poly(const IMat& S);

struct SpectralReport {
  bool primitive = false;
  int primitivity_exponent = 0;            // smallest k with S^k > 0, 0 when none
  std::vector<RootEnclosure> eigenvalues;  // canonical order, with multiplicities
  int pf_index = -1;                       // index of the PF eigenvalue
  QInterval pf_enclosure;                  // certified, width <= 1e-12
  double pf_value = 0;
  Eigen::VectorXd right, left;             // unit-sum normalized
  bool eigenvector_positive = false;
};

/// Perron-Frobenius analysis of a nonnegative integer matrix. Primitivity is
/// decided exactly by boolean powers up to (m-1)^2 + 1; the dominant eigenvalue
/// is certified from the exact characteristic polynomial.
SpectralReport pf_analysis(const IMat& S);

/// Exact solve of Q V = V M for the unique integer matrix M, where Q (d x d) and
/// V (d x s) have entries in a common real number field and the columns of V are
/// free generators. Throws when no integer solution exists (the module is not
/// Q-invariant).
IMat induced_integer_matrix(const FieldMatrix& Q, const FieldMatrix& V);

/// Exact unique solution of A x = b over the rationals; requires full column rank
/// and consistency.
QVec solve_rational(const QMat& A, const QVec& b);

}  // namespace ap
