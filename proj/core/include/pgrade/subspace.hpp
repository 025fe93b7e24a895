// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file subspace.hpp
 * @brief Coordinate frames over determinant supports and orthonormal subspaces
 *        of a fixed particle sector.
 */

#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "pgrade/state_vector.hpp"

namespace pgrade {

/// Tolerance for the orthonormality check on Subspace construction.
inline constexpr double kOrthonormalityTol = 1e-10;
/// Projector Frobenius distance below which two subspaces are considered equal.
inline constexpr double kSubspaceTol = 1e-8;

/// A finite ordered list of determinants used as dense coordinates.
class Frame {
 public:
  Frame() = default;
  /// Sorts and deduplicates.
  explicit Frame(std::vector<Occupation> occupations);
  /// Smallest frame containing every determinant of the given vectors.
  static Frame covering(std::span<const StateVector> vectors);

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(occupations_.size()); }
  const std::vector<Occupation>& occupations() const noexcept { return occupations_; }
  std::optional<Eigen::Index> index_of(const Occupation& occ) const;

  /// Dense coordinates. Throws ShapeError if v has support outside the frame.
  Eigen::VectorXcd coordinates(const StateVector& v) const;
  Eigen::MatrixXcd columns(std::span<const StateVector> vectors) const;
  StateVector vector(const Eigen::Ref<const Eigen::VectorXcd>& coords, int dim,
                     int particles) const;

 private:
  std::vector<Occupation> occupations_;
  std::unordered_map<Occupation, Eigen::Index> index_;
};

/// Subspace of the p-particle sector held as an orthonormal basis.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  Subspace(int dim, int sector);
  /// Throws DomainError unless the Gram matrix is the identity within kOrthonormalityTol.
  Subspace(int dim, int sector, std::vector<StateVector> orthonormal_basis);

  /**
   * Orthonormal basis of span(vectors) from a thin SVD; singular values at or
   * below rel_tol * (largest singular value) are treated as zero.
   */
  static Subspace span(int dim, int sector, std::span<const StateVector> vectors,
                       double rel_tol = 1e-10);

  int dim() const noexcept { return dim_; }
  int sector() const noexcept { return sector_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  bool empty() const noexcept { return basis_.empty(); }
  const std::vector<StateVector>& basis() const noexcept { return basis_; }

  StateVector project(const StateVector& v) const;
  /// ||v - P v||.
  double residual(const StateVector& v) const;

 private:
  int dim_ = 1;
  int sector_ = 0;
  std::vector<StateVector> basis_;
};

/// Matrix of inner products <a_i | b_j>.
Eigen::MatrixXcd cross_gram(const Subspace& a, const Subspace& b);

/// Frobenius norm of P_a - P_b.
double projector_distance(const Subspace& a, const Subspace& b);

/// a ⊆ b, judged by the largest residual of a's basis after projection onto b.
bool contained_in(const Subspace& a, const Subspace& b, double tol = kSubspaceTol);

/// a + b, orthonormalized.
Subspace sum(const Subspace& a, const Subspace& b);

/// Orthogonal direct sum of pairwise-orthogonal pieces.
Subspace direct_sum(std::span<const Subspace> pieces, int dim, int sector);

}  // namespace pgrade
