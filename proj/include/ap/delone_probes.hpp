#pragma once

#include "ap/mset.hpp"
#include "ap/report.hpp"

namespace ap {

/// (r, R) estimate on a region: r = half the minimum pairwise distance, R = half
/// the largest empty-ball radius found by grid scanning at pitch r/4, excluding a
/// boundary margin (R is a lower estimate near the edge).
std::pair<double, double> estimate_parameters(const MSet& x, const BoxD& region);

struct FiniteTypeResult {
  bool consistent = false;
  long long census = 0;                // distinct difference vectors in B(0,T)
  long long census_half = 0, census_quarter = 0;
  long long cluster_census = 0;        // distinct radius-T clusters up to translation
  Report report{"finite-type probe"};
};

/// Census of (X-X) in the ball of radius T, computed exactly on integer
/// coordinates within the window; consistent when two window doublings add nothing.
FiniteTypeResult finite_type_probe(const MSet& x, double T, const BoxD& window);

struct MeyerResult {
  bool consistent = false;
  std::vector<IVec> f_set;             // the finite correction set F
  double min_difference_gap = 0;
  Report report{"meyer probe"};
};

/// Decomposes every difference z into x + f with minimal f; Meyer-consistent when
/// |F| is stable under window doubling and the X-X gap stays above r/2.
MeyerResult meyer_probe(const MSet& x, const BoxD& window);

/// Chain of X-points from x to x' with steps <= 4R and length <= ((2R)^-1 + r^-1)
/// * |x - x'| + 1, built from equally spaced waypoints snapped to X.
std::vector<IVec> chain(const MSet& x, const IVec& from, const IVec& to);

struct AddressAuditResult {
  double lipschitz = 0;                // max over sampled pairs
  Eigen::MatrixXd linear_part;         // s x d least-squares fit
  double residual_sup = 0;
  std::vector<double> window_sups;     // per dyadic subwindow
  bool residual_bounded = false;       // no growth across the last windows
  Report report{"address audit"};
};

/// Lipschitz estimate, least-squares linear part, and residual growth flags for
/// the coordinate (address) map of the frame.
AddressAuditResult address_audit(const MSet& x);

/// Optional cross-check of the linear part by the doubling construction
/// L(y) = lim phi(x_k)/2^k with x_k the X-point nearest to 2^k y.
Eigen::MatrixXd address_linear_by_doubling(const MSet& x, int kmax);

struct InflationAuditResult {
  bool inclusion_ok = false;           // eta X within X on the window, exact
  bool finite_type_consistent = false;
  bool meyer_consistent = false;
  NumberClass number_class = NumberClass::None;
  bool contradiction = false;
  Report report{"inflation audit"};
};

/// Exact check of eta X within X on the window, then cross-tabulation of the probe
/// verdicts against the number class of eta per the inflation-symmetry theorem.
InflationAuditResult inflation_audit(const MSet& x, const AlgebraicInteger& eta,
                                     const BoxD& window);

}  // namespace ap
