// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file density.hpp
 * @brief Reduced density operators of pure and ensemble states and their
 *        internal (range) and external (kernel) spaces.
 *
 * The p-order operator acts on a p-particle Φ as Ψ ↪ (Φ ↩ Ψ). With the
 * determinant inner product this is D^p = Σ_Ω |Ψ ↪ Ω⟩⟨Ψ ↪ Ω| over (n-p)-particle
 * determinants Ω, so tr D^p = C(n, p) for a normalized Ψ.
 */

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pgrade/state_vector.hpp"
#include "pgrade/subspace.hpp"

namespace pgrade {

/// Largest C(dim, p) for which a sector is materialized.
inline constexpr std::uint64_t kDefaultSectorCeiling = 20000;

struct DensityOptions {
  /// Eigenvalues above rank_tol * (largest eigenvalue) count as non-zero.
  double rank_tol = 1e-10;
  std::uint64_t sector_ceiling = kDefaultSectorCeiling;
};

/// Convex combination of normalized states with a common particle number.
class MixedState {
 public:
  struct Component {
    double weight;
    StateVector state;
  };

  /// Throws DomainError unless weights are positive, sum to 1 and states are normalized (1e-12).
  explicit MixedState(std::vector<Component> components);
  /// The pure state of psi / ||psi||.
  static MixedState pure(const StateVector& psi);

  int dim() const noexcept { return components_.front().state.dim(); }
  int particles() const noexcept { return components_.front().state.particles(); }
  const std::vector<Component>& components() const noexcept { return components_; }
  bool is_pure() const noexcept { return components_.size() == 1; }

 private:
  std::vector<Component> components_;
};

/// Reduced density matrix restricted to its support; it vanishes on every other determinant.
struct RdmMatrix {
  int dim = 1;
  int sector = 0;
  Frame rows;
  Eigen::MatrixXcd matrix;

  /// <a | D^p | b>; zero outside the support.
  Complex element(const Occupation& a, const Occupation& b) const;
  double trace() const { return matrix.trace().real(); }
};

/// Throws ResourceCeilingError when C(dim, p) exceeds the ceiling.
void check_sector_ceiling(int dim, int p, std::uint64_t ceiling);

/// p-order reduced density matrix, 0 <= p <= n.
RdmMatrix rdm(const MixedState& state, int p, const DensityOptions& opts = {});

/// Span of eigenvectors of D^p with non-zero eigenvalue, 1 <= p <= n.
Subspace internal_space(const MixedState& state, int p, const DensityOptions& opts = {});

/// Kernel of D^p inside the full p-particle sector, 1 <= p <= n.
Subspace external_space(const MixedState& state, int p, const DensityOptions& opts = {});

/// Every determinant of the p-particle sector over dim orbitals, in Occupation order.
std::vector<Occupation> sector_determinants(int dim, int p);

}  // namespace pgrade
