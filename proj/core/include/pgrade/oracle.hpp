// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Brute-force reference evaluations. They use only the Fock-space
 *        primitives and a dense Gram-Schmidt, never the coproduct or the
 *        density-matrix code they are meant to check.
 */

#pragma once

#include <cstdint>

#include "pgrade/density.hpp"
#include "pgrade/groupfn.hpp"
#include "pgrade/qoperator.hpp"
#include "pgrade/subspace.hpp"

namespace pgrade::oracle {

/// Ψ1 ∧ ... ∧ Ψr by repeated wedge. Throws ResourceCeilingError if C(dim, n) > ceiling.
StateVector expand(const GroupProduct& group, std::uint64_t ceiling = kDefaultSectorCeiling);

Complex overlap_direct(const GroupProduct& bra, const GroupProduct& ket);

/// Applies every λ a†...a string to the expanded ket, then contracts with the expanded bra.
Complex matelem_direct(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket);

/// Orthonormalized span of Ω ↩ Ψ_i over every (n - p)-determinant Ω and every component.
Subspace internal_space_direct(const MixedState& state, int p, double rel_tol = 1e-10);

}  // namespace pgrade::oracle
