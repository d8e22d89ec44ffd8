#pragma once

#include <optional>

#include "ap/spectral.hpp"

namespace ap {

/// Lexicographic order on integer coordinate vectors.
bool ivec_less(const IVec& a, const IVec& b);
bool ivec_eq(const IVec& a, const IVec& b);

/// Axis-aligned box in physical coordinates.
struct BoxD {
  Eigen::VectorXd lo, hi;

  static BoxD interval(double a, double b);
  static BoxD square(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);
  int dim() const { return (int)lo.size(); }
  bool contains(const Eigen::VectorXd& p, double tol = 0.0) const;
  double width(int axis) const { return hi(axis) - lo(axis); }
  double min_width() const;
  BoxD scaled_about_center(double factor) const;
  BoxD inflated(double margin) const;
};

/// Declared free basis of the module generated by a point set: ambient dimension d,
/// rank s, exact basis matrix V (d x s) over a real number field, plus its float
/// embedding. Point coordinates are integer vectors n with position V*n.
class ModuleFrame {
 public:
  /// Validates that the columns of V admit no rational relation (free generators).
  static std::shared_ptr<const ModuleFrame> create(FieldMatrix V);
  /// Frame for Z^d (identity basis over the rationals).
  static std::shared_ptr<const ModuleFrame> lattice(int d);
  /// d=1 frame with the power basis 1, beta, ..., beta^(s-1) of the field.
  static std::shared_ptr<const ModuleFrame> power_basis(const FieldPtr& field);

  int d() const { return V_.rows; }
  int s() const { return V_.cols; }
  const FieldMatrix& V() const { return V_; }
  const FieldPtr& field() const { return V_.field; }
  const Eigen::MatrixXd& embedding() const { return Vd_; }

  Eigen::VectorXd position(const IVec& n) const;
  std::vector<FieldElem> position_exact(const IVec& n) const;
  /// d=1 convenience: the single exact coordinate.
  FieldElem value1(const IVec& n) const;

  bool same_frame(const ModuleFrame& o) const;

 private:
  ModuleFrame() = default;
  FieldMatrix V_;
  Eigen::MatrixXd Vd_;
};

using FramePtr = std::shared_ptr<const ModuleFrame>;

/// Finite colored point set with exact module coordinates. Per-color lists are
/// kept canonically sorted and duplicate-free; colors may share points.
struct MSet {
  FramePtr frame;
  std::vector<std::vector<IVec>> points;  // one sorted list per color
  std::optional<double> r, R;             // declared Delone parameters

  static MSet empty(FramePtr frame, int colors);
  int colors() const { return (int)points.size(); }
  int total_points() const;
  bool is_empty() const { return total_points() == 0; }

  void insert(int color, const IVec& n);   // keeps order, ignores duplicates
  bool contains(int color, const IVec& n) const;
  /// Sorted duplicate-free union of all colors.
  std::vector<IVec> support() const;
  /// All points with positions inside the box (tol-inflated).
  MSet restrict(const BoxD& box, double tol = 1e-9) const;
  MSet translate(const IVec& t) const;

  bool operator==(const MSet& o) const;
};

/// A cluster is a finite m-set in the same frame (typically a subset of a parent).
using Cluster = MSet;

/// True iff every per-color point of c is a point of parent.
bool is_subcluster(const Cluster& c, const MSet& parent);
/// Exact translation equivalence on module coordinates: c2 == t + c1 for module t.
std::optional<IVec> translation_between(const Cluster& a, const Cluster& b);

/// Point-set text format: header (d, s, m, field, V, optional r/R), one record per
/// point ("point <color> <n_1> ... <n_s>"), canonically sorted on emit.
std::string write_pointset(const MSet& x);
MSet parse_pointset(const std::string& text);
/// CSV export: color, coordinates, then float position columns.
std::string pointset_csv(const MSet& x);

/// Serialization helpers shared by the file formats.
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& s);
std::string field_elem_to_string(const FieldElem& e);

}  // namespace ap
