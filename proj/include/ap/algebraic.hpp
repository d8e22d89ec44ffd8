#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ap/root_isolation.hpp"

namespace ap {

/// Classes of real algebraic integers > 1 by conjugate moduli. Emitted classes are
/// mutually exclusive with precedence Pisot > Salem > Perron > Lind.
enum class NumberClass { Pisot, Salem, Perron, Lind, None };

std::string to_string(NumberClass c);

/// A monic irreducible integer polynomial together with a certified root selection.
/// Roots are kept in canonical order (ascending real part, then imaginary part);
/// the selector is an index into that order, so serialization is stable.
struct AlgebraicInteger {
  ZPoly minpoly;
  int root_index = 0;
  std::vector<RootEnclosure> roots;

  int degree() const { return minpoly.degree(); }
  const RootEnclosure& selected() const { return roots[root_index]; }
  RootEnclosure& selected() { return roots[root_index]; }
  double value() const { return selected().approx_re(); }

  bool same_number(const AlgebraicInteger& o) const {
    return minpoly == o.minpoly && root_index == o.root_index;
  }

  /// The conjugate with root index j, as its own algebraic integer.
  AlgebraicInteger conjugate(int j) const {
    AlgebraicInteger c = *this;
    c.root_index = j;
    return c;
  }
};

/// Trial factorization by conjugation-closed root subsets; complete for monic
/// integer polynomials up to the desk-scale degree cap of 12.
bool is_irreducible(const ZPoly& monic);

/// Validates monicity, degree >= 1 and irreducibility, isolates roots at 1e-12.
AlgebraicInteger make_algebraic_integer(const ZPoly& p, int root_index);

/// Convenience: selects the largest real root (errors when no real root exists).
AlgebraicInteger make_largest_real_root(const ZPoly& p);

/// Exact set of root indices lying on the unit circle. Works for any polynomial
/// whose enclosures are given (reducible allowed, e.g. ratio polynomials).
std::vector<int> unit_circle_indices(const ZPoly& squarefree, std::vector<RootEnclosure>& roots);

/// Exact decision of |roots[i]| == |roots[j]| for roots of one polynomial, via the
/// ratio polynomial Res_y(p(y), p(x y)) and its unit-circle roots.
bool modulus_equal(const ZPoly& p, std::vector<RootEnclosure>& roots, int i, int j);

struct Classification {
  NumberClass cls = NumberClass::None;
  std::vector<QInterval> conjugate_moduli;   // certified, width <= 1e-12
  QInterval max_conjugate_modulus;           // empty degree-1 case: [0,0]
  bool used_exact_tiebreak = false;
};

/// Conjugate-moduli classification per the Pisot/Salem/Perron/Lind definitions.
/// Preconditions: selected root real and > 1. Boundary comparisons that are not
/// certified at working precision escalate and finish with exact resultant-based
/// tests, so Salem and Lind boundaries are decided exactly.
Classification classify(const AlgebraicInteger& a);

struct PisotFamilyResult {
  bool is_family = false;
  // Violating pair: member index and conjugate root index within its polynomial.
  std::optional<std::pair<int, int>> witness;
};

/// True iff for every member, each conjugate is in the family or has modulus < 1.
PisotFamilyResult pisot_family_check(const std::vector<AlgebraicInteger>& family);

struct KSAdmissibilityResult {
  bool admissible = false;
  std::vector<std::string> failures;
};

/// Expansion-spectrum admissibility for the diagonalizable case: every conjugate of
/// a member of multiplicity k is either strictly smaller in modulus or present in
/// the spectrum with multiplicity >= k. All member moduli must exceed 1.
KSAdmissibilityResult ks_admissibility(
    const std::vector<std::pair<AlgebraicInteger, int>>& spectrum);

struct PowerMod1Result {
  std::vector<double> distances;            // ||a^n x||, n = 0..N
  std::vector<std::vector<Int>> coordinates;  // exact power-basis coordinates of a^n x
};

/// Distance of a^n * x to the nearest integer, n = 0..N, where x is given by exact
/// power-basis coordinates. The companion recurrence is exact; the distances carry
/// certified error below 1e-9. Rational coordinates support scaled tests.
PowerMod1Result power_mod1(const AlgebraicInteger& a, const std::vector<Rational>& x, int N);

/// Companion matrix of a monic polynomial: maps power-basis coordinates of z to
/// those of beta*z (ones on the subdiagonal, negated coefficients in the last column).
std::vector<std::vector<Int>> companion_matrix(const ZPoly& monic);

}  // namespace ap
