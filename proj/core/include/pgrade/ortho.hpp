// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ortho.hpp
 * @brief Graded p-orthogonality between states and Araki angles between
 *        their p-internal spaces.
 */

#pragma once

#include <optional>
#include <vector>

#include "pgrade/density.hpp"
#include "pgrade/subspace.hpp"

namespace pgrade {

struct OrthoOptions {
  /// Largest |<u|v>| between internal-space basis vectors still counted as orthogonal.
  double tol = 1e-8;
  /// Eigenvalues of (COSΘ)² closer than this share one angle block.
  double angle_bin = 1e-9;
  DensityOptions density{};
};

/// Largest |<u|v>| over orthonormal bases of the two subspaces.
double max_cross_overlap(const Subspace& a, const Subspace& b);

/// I^p[s1] ⊥ I^p[s2]. Requires 1 <= p <= min(n1, n2).
bool is_p_orthogonal(const MixedState& s1, const MixedState& s2, int p,
                     const OrthoOptions& opts = {});

/// 1-orthogonality.
bool is_strongly_orthogonal(const MixedState& s1, const MixedState& s2,
                            const OrthoOptions& opts = {});

struct GradeReport {
  /// orthogonal[p - 1] is the verdict at p, for p = 1..min(n1, n2).
  std::vector<bool> orthogonal;
  /// max_overlap[p - 1] is the largest internal-space cross overlap at p.
  std::vector<double> max_overlap;
  /// Smallest p with an orthogonal verdict.
  std::optional<int> grade;

  int max_p() const noexcept { return static_cast<int>(orthogonal.size()); }
  /// Orthogonal at p implies orthogonal at every larger p.
  bool is_monotone() const noexcept;
};

/// Full verdict table.
GradeReport grade(const MixedState& s1, const MixedState& s2, const OrthoOptions& opts = {});

/**
 * Smallest orthogonal p by bisection over p. Valid because orthogonality at p
 * implies orthogonality at all larger p; evaluates O(log min(n1, n2)) verdicts.
 */
std::optional<int> grade_bisect(const MixedState& s1, const MixedState& s2,
                                const OrthoOptions& opts = {});

struct AngleBlock {
  double theta;      ///< radians in [0, π/2]
  int multiplicity;  ///< dimension of the eigenspace V_θ inside E
};

struct AngleSpectrum {
  int p = 0;
  int dim1 = 0;
  int dim2 = 0;
  int dim_e = 0;  ///< dim(I^p[s1] + I^p[s2])
  /// min(dim1, dim2) principal angles, ascending.
  std::vector<double> principal;
  /// Angle blocks of the Θ operator on E, ascending in θ; multiplicities sum to dim_e.
  std::vector<AngleBlock> blocks;
};

/**
 * Principal angles between two subspaces from the SVD of the cross-Gram
 * matrix. Small angles are taken from the sines of the residual of the
 * smaller space against the larger one, which keeps them accurate near 0.
 */
std::vector<double> principal_angles(const Subspace& a, const Subspace& b);

/**
 * Expands ascending principal angles into E-multiplicities: the first `shared`
 * angles are common directions and count once, the remaining principal pairs
 * count twice, and each unpaired direction of the larger space adds one π/2.
 * `shared` is dim1 + dim2 - dim(E).
 */
std::vector<double> expand_to_operator_angles(const std::vector<double>& principal, int dim1,
                                              int dim2, int shared);

/// One eigenspace of (COSΘ)² on E with its traces on the two internal spaces.
struct AngleComponent {
  double theta;
  Subspace block;         ///< V_θ
  Subspace first_part;    ///< I^p[s1] ∩ V_θ
  Subspace second_part;   ///< I^p[s2] ∩ V_θ
};

/// Operator-level data on E, built from the projectors P1, P2.
struct ArakiOperators {
  Subspace e;                  ///< E = I1 + I2
  Eigen::MatrixXcd p1, p2;     ///< projectors in E coordinates
  Eigen::MatrixXcd cos2, sin2; ///< (P1 + P2 - Id)², (P1 - P2)²
};

/// Angle spectrum of two subspaces of one sector. Throws DomainError if either is empty.
AngleSpectrum araki_angles(const Subspace& i1, const Subspace& i2, const OrthoOptions& opts = {});
std::vector<AngleComponent> araki_decomposition(const Subspace& i1, const Subspace& i2,
                                                const OrthoOptions& opts = {});
ArakiOperators araki_operators(const Subspace& i1, const Subspace& i2);

/// Angles of the Θ operator, one per eigenvector of (COSΘ)², ascending.
std::vector<double> operator_angles(const Subspace& i1, const Subspace& i2);

AngleSpectrum araki_angles(const MixedState& s1, const MixedState& s2, int p,
                           const OrthoOptions& opts = {});
std::vector<AngleComponent> araki_decomposition(const MixedState& s1, const MixedState& s2, int p,
                                                const OrthoOptions& opts = {});

}  // namespace pgrade
