#pragma once

#include "ap/delone_probes.hpp"

namespace ap {

/// Expansion map plus digit-set matrix acting on colored module point sets:
/// color i collects Q * (color j) + D_ij over all j, as exact integer coordinates.
struct MSetSubstitution {
  FramePtr frame;
  FieldMatrix Q;   // d x d, entries in the frame field, expanding
  IMat M;          // induced s x s integer action on coordinates
  int m = 0;
  std::vector<std::vector<std::vector<IVec>>> digits;  // digits[i][j]

  static MSetSubstitution create(FramePtr frame, FieldMatrix Q, int colors,
                                 std::vector<std::vector<std::vector<IVec>>> digits);

  /// Substitution matrix S_ij = #digits[i][j].
  IMat substitution_matrix() const;
  /// Exact coordinate action n -> M n + a.
  IVec map_point(const IVec& n, const IVec& digit) const;
  /// Certified lower bound for min |eigenvalue of Q| (> 1 when expanding).
  double min_expansion() const { return min_expansion_; }
  double max_digit_norm() const;

  double min_expansion_ = 0;  // set by create()
};

struct PhiResult {
  MSet set;
  bool had_overlap = false;
  std::vector<std::string> overlaps;  // itemized duplicate points
};

/// Applies the substitution k times. Overlapping union terms are an error in
/// strict mode and are deduplicated (and itemized) in lenient mode.
PhiResult apply_phi(const MSetSubstitution& sub, const MSet& input, int k, bool strict = true);

struct ValidationReport {
  bool q_expanding = false;
  SpectralReport spectral;
  double det_q_abs = 0;
  double pf_det_gap = 0;     // |lambda(S) - |det Q||
  bool pf_det_ok = false;    // gap below 1e-9
  bool disjoint = true;
  std::vector<std::string> violations;
  Report report{"substitution validation"};

  bool ok() const { return q_expanding && spectral.primitive && pf_det_ok && disjoint; }
};

/// Checks Q expanding (certified), primitivity and PF data of S, the determinant
/// identity, and exact disjointness of the defining union on iterates of the seed.
ValidationReport validate(const MSetSubstitution& sub, const MSet& seed, const BoxD& window);

/// Cluster P with Phi(P) containing P; iterating Phi on it exhausts a fixed point.
struct GeneratingCluster {
  Cluster cluster;
};

/// Searches one-point seeds (exact affine fixed points of single branches), then
/// bounded two-point clusters. Failure to find one is reported, not a proof.
GeneratingCluster find_generating_cluster(const MSetSubstitution& sub);

struct LegalityResult {
  bool legal = false;
  int color = -1;       // witness seed color
  int power = 0;        // witness k
  IVec translation;     // witness translation
};

/// True when P is exactly a translate of a subcluster of Phi^k of a single seed
/// point, k <= k_max; false means "not found", not a disproof.
LegalityResult is_legal(const MSetSubstitution& sub, const Cluster& p, int k_max);

/// Iterates Phi on a generating cluster until the region is covered with margin,
/// then restricts. Throws with the covered sub-region when growth stalls first.
MSet generate_patch(const MSetSubstitution& sub, const GeneratingCluster& seed,
                    const BoxD& region);

struct RepetitivityResult {
  long long cluster_types = 0;
  double M = 0;                   // patch-relative repetitivity radius
  bool repetitive_consistent = false;
  Report report{"repetitivity probe"};
};

/// Patch-relative M_X(T): the smallest M such that every sampled ball of radius M
/// inside the patch contains a translate of every radius-T cluster type.
RepetitivityResult repetitivity_probe(const MSet& patch, double T);

}  // namespace ap
