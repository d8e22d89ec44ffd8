#pragma once

#include <memory>
#include <vector>

#include "ap/algebraic.hpp"

namespace ap {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a real number field Q(beta), stored as exact rational coordinates
/// over the power basis 1, beta, ..., beta^(s-1).
struct FieldElem {
  FieldPtr field;
  std::vector<Rational> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coords.size(); ++i)
      if (coords[i] != 0) return false;
    return true;
  }
  const Rational& rational_value() const { return coords[0]; }
  bool integer_coords() const {
    for (const auto& c : coords)
      if (denominator(c) != 1) return false;
    return true;
  }

  /// Certified enclosure of the real value under the selected embedding.
  QInterval value_interval(const Rational& tol) const;
  /// Certified box of the image under embedding #root_idx (canonical root order).
  QBox embedding_box(int root_idx, const Rational& tol) const;
  double to_double() const;
  /// Exact sign of the real value: -1, 0, +1.
  int sign() const;
  /// Exact floor of the real value (integrality ties resolved exactly).
  Int floor_exact() const;

  bool operator==(const FieldElem& o) const { return coords == o.coords; }

  // Hidden friends: found by ADL only, so they never participate in unrelated
  // overload resolution (e.g. Eigen expressions inside this namespace).
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const Rational& s, const FieldElem& a);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  /// Exact order via the sign of the difference.
  friend bool operator<(const FieldElem& a, const FieldElem& b);
  friend bool operator<=(const FieldElem& a, const FieldElem& b) { return a == b || a < b; }
};

FieldElem inverse(const FieldElem& a);
int compare(const FieldElem& a, const Rational& q);  // sign(a - q)

/// A real number field presented by a monic irreducible polynomial and a selected
/// real root. Degree 1 represents the rationals. Embedding enclosures are cached
/// at high precision at construction, so typical evaluations never refine.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr create(const ZPoly& minpoly, int root_index);
  static FieldPtr create(const AlgebraicInteger& beta);
  /// Q presented as the field of x - 0.
  static FieldPtr rationals();

  int degree() const { return beta_.degree(); }
  const AlgebraicInteger& generator() const { return beta_; }
  const std::vector<RootEnclosure>& embeddings() const { return beta_.roots; }
  int selected_embedding() const { return beta_.root_index; }
  bool is_rational_field() const { return degree() == 1; }

  FieldElem elem(std::vector<Rational> coords) const;
  FieldElem from_rational(const Rational& q) const;
  FieldElem zero() const { return from_rational(0); }
  FieldElem one() const { return from_rational(1); }
  /// beta itself (for degree 1, the rational root).
  FieldElem gen() const;

  /// Reduction of beta^(degree+k), k = 0 .. degree-2, over the power basis.
  const std::vector<std::vector<Rational>>& reduction_table() const { return reduction_; }

 private:
  NumberField() = default;
  AlgebraicInteger beta_;
  std::vector<std::vector<Rational>> reduction_;
};

/// Dense matrix over a number field with exact arithmetic.
struct FieldMatrix {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<FieldElem> data;  // row-major

  static FieldMatrix zero(const FieldPtr& f, int r, int c);
  static FieldMatrix identity(const FieldPtr& f, int n);
  FieldElem& at(int r, int c) { return data[r * cols + c]; }
  const FieldElem& at(int r, int c) const { return data[r * cols + c]; }

  FieldMatrix transpose() const;
  FieldElem determinant() const;       // Gaussian elimination, exact
  FieldMatrix inverse() const;         // throws on singular
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
};

}  // namespace ap
