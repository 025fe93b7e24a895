// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pgrade/state_vector.hpp"

namespace pgrade {

/**
 * Hermitian q-particle operator
 *   V = Σ λ_{I,J} a†_{i_1} ... a†_{i_q} a_{j_q} ... a_{j_1}
 * over ordered orbital tuples I, J of length q.
 */
class QOperator {
 public:
  using Tuple = std::vector<int>;
  using Key = std::pair<Tuple, Tuple>;
  using TermMap = std::map<Key, Complex>;

  enum class Closure {
    complete,  ///< add missing (J, I) partners as conj(λ_{I,J})
    validate,  ///< every (J, I) partner must be present
  };

  /// Throws DomainError on malformed tuples or Hermiticity violations beyond `tol`.
  QOperator(int rank, TermMap terms, Closure closure = Closure::complete, double tol = 1e-12);

  /// λ_{(i),(i)} = 1 for i = 1..dim.
  static QOperator number_operator(int dim);

  int rank() const noexcept { return rank_; }
  const TermMap& terms() const noexcept { return terms_; }
  /// Largest orbital index referenced, 0 for the zero operator.
  int max_orbital() const noexcept;

  /// Second-quantized action on a state with at least `rank` particles.
  StateVector apply(const StateVector& psi) const;

 private:
  int rank_;
  TermMap terms_;
};

}  // namespace pgrade
