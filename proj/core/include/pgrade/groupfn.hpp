// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file groupfn.hpp
 * @brief Antisymmetrized group functions Ψ1 ∧ ... ∧ Ψr, their overlaps and
 *        operator matrix elements through the coproduct expansion, and the
 *        variants pruned by a declared q-orthogonality between the active
 *        bra group and the ket spectators.
 *
 * Factor 1 of the bra is always the active group. Index-sequence plans are
 * enumerated lexicographically over the length tuple, then over position
 * subsets; partial sums are reduced in that order.
 */

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pgrade/ortho.hpp"
#include "pgrade/qoperator.hpp"
#include "pgrade/state_vector.hpp"

namespace pgrade {

class GroupProduct {
 public:
  /// Throws on an empty factor list, a factor with no particles, or mixed bases.
  explicit GroupProduct(std::vector<StateVector> factors);

  const std::vector<StateVector>& factors() const noexcept { return factors_; }
  const StateVector& factor(std::size_t k) const { return factors_.at(k); }
  std::size_t size() const noexcept { return factors_.size(); }
  int dim() const noexcept { return factors_.front().dim(); }
  int particles() const noexcept;
  std::vector<int> factor_sizes() const;

  /**
   * Moves factor k to the front. Returns (sign, reordered) with
   * this == sign * reordered, sign = (-1)^(n_k * Σ_{j<k} n_j).
   */
  std::pair<int, GroupProduct> with_active(std::size_t k) const;

 private:
  std::vector<StateVector> factors_;
};

/**
 * Sign of the group-wise coproduct reordering for the length list
 * (|I1|, n1 - |I1|, ..., |Ir|, nr - |Ir|):
 *   (-1)^(Σ_{j>=2} Σ_{k<j} |I_j| (n_k - |I_k|)).
 */
int rho_sign(std::span<const int> lengths);

/**
 * General block sign (-1)^(Σ_{j<l} Σ_{i>k} n_k^l n_i^j) for a block-length
 * matrix given column by column: columns[j][i] = n_{i+1}^{j+1}. The two-row
 * case reduces to rho_sign.
 */
int rho_twist(const std::vector<std::vector<int>>& columns);

struct TermCount {
  std::uint64_t total;   ///< C(n, n1) active index sequences without pruning
  std::uint64_t pruned;  ///< sequences surviving |I1| > n1 - q
};

/// Requires 1 <= q <= n1 <= n.
TermCount term_count(int n, int n1, int q);

/// Which ket pieces a declared q-orthogonality lets the matrix-element pruning drop.
enum class ImageBound {
  /// Drop inner plans whose spectator share of the active bracket is >= q
  /// (|I1| + |I_image| <= n1 - q). Always exact under the declared constraint.
  spectator_degree,
  /// Drop inner plans with |I1| <= |J1| - q regardless of the operator-image
  /// share. Loses non-zero terms whenever the image feeds the active bracket.
  active_only,
};

struct EvalOptions {
  /// Worker count for plan enumeration; results are reduced in worker order.
  int threads = 1;
  /// Check the declared q-orthogonality before pruning (builds internal spaces).
  bool verify = false;
  OrthoOptions ortho{};
  ImageBound image_bound = ImageBound::spectator_degree;
};

struct PlanStats {
  /// Index-sequence plans (I1, ..., Ir) enumerated at the active level. For
  /// overlaps this equals term_count().
  std::uint64_t plans = 0;
  /// Operator plans (J1, ..., Jr); zero for overlaps.
  std::uint64_t operator_plans = 0;
};

struct Evaluation {
  Complex value;
  PlanStats stats;
};

/// <bra | ket>. Bra and ket factor sizes must match position by position.
Evaluation overlap_group(const GroupProduct& bra, const GroupProduct& ket,
                         const EvalOptions& opts = {});

/**
 * Same value as overlap_group when bra factor 1 is q-orthogonal to the ket
 * spectator product Ψ2 ∧ ... ∧ Ψr; only plans with |I1| >= n1 - q + 1 are
 * enumerated. With opts.verify a violated constraint raises VerificationError.
 */
Evaluation overlap_group_pruned(const GroupProduct& bra, const GroupProduct& ket, int q,
                                const EvalOptions& opts = {});

/// H[Ψ1 ∧ ... ∧ Ψr] for the operator induced by op, via the coproduct split of the ket.
StateVector apply_operator(const QOperator& op, const GroupProduct& ket);

/// <bra | H | ket>.
Evaluation matelem(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket,
                   const EvalOptions& opts = {});

/// <bra | H | ket> with inner plans pruned per opts.image_bound under q-orthogonality.
Evaluation matelem_pruned(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket,
                          int q, const EvalOptions& opts = {});

/**
 * Throws VerificationError unless bra factor 1 is q-orthogonal to the ket
 * spectator product. Vacuous (no throw) when the ket has one factor or
 * q exceeds either particle number.
 */
void verify_active_orthogonality(const GroupProduct& bra, const GroupProduct& ket, int q,
                                 const OrthoOptions& opts = {});

}  // namespace pgrade
