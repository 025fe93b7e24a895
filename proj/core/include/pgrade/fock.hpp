// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Exterior algebra over a finite orthonormal orbital basis.
 *
 * Sign conventions, fixed once for the whole library:
 *  - wedge of determinants concatenates orbital lists and sorts them,
 *    picking up the sign of the sorting permutation;
 *  - interior_left(psi, phi) is the adjoint of psi ∧ (·):
 *      <theta | psi ↩ phi> = <psi ∧ theta | phi>;
 *  - interior_right(phi, psi) is the adjoint of (·) ∧ psi:
 *      <theta | phi ↪ psi> = <theta ∧ psi | phi>;
 *  - a_j removes orbital j with sign (-1)^(number of occupied orbitals below j),
 *    a†_j inserts it with the same sign.
 */

#pragma once

#include <span>
#include <vector>

#include "pgrade/state_vector.hpp"

namespace pgrade {

/// Bilinear Grassmann product a ∧ b.
StateVector wedge(const StateVector& a, const StateVector& b);

/// Left-to-right wedge of all factors; the vacuum for an empty list.
StateVector wedge_all(std::span<const StateVector> factors, int dim);

/// <a|b>, conjugate-linear in a. Throws ShapeError on basis or particle-number mismatch.
Complex inner(const StateVector& a, const StateVector& b);

/// psi ↩ phi. Conjugate-linear in psi, linear in phi. Requires psi.particles() <= phi.particles().
StateVector interior_left(const StateVector& psi, const StateVector& phi);

/// phi ↪ psi. Linear in phi, conjugate-linear in psi. Requires psi.particles() <= phi.particles().
StateVector interior_right(const StateVector& phi, const StateVector& psi);

/**
 * a_{j_q} ... a_{j_1} psi, applying a_{j_1} first. Repeated indices give zero.
 * With this convention the string equals (φ_{j_1} ∧ ... ∧ φ_{j_q}) ↩ psi.
 */
StateVector annihilate_sequence(std::span<const int> orbitals, const StateVector& psi);

/// a†_{i_1} ... a†_{i_q} psi, applying a†_{i_q} first. Repeated indices give zero.
StateVector create_sequence(std::span<const int> orbitals, const StateVector& psi);

/// One term of the coproduct split of a determinant expansion.
struct SplitTerm {
  int sign;             ///< sign of the permutation sorting I // Ī
  Complex coefficient;  ///< coefficient of the source determinant (sign not folded in)
  Occupation left;      ///< orbitals at positions I
  Occupation right;     ///< orbitals at the complementary positions Ī
};

/**
 * Coproduct split of phi into (m, p - m) parts: for every determinant of phi
 * and every m-subset I of positions {1..p} (lexicographic), emits the pair of
 * sub-determinants with sign ρ(I, Ī). For each emitted term
 * sign * left ∧ right reproduces the source determinant.
 */
std::vector<SplitTerm> split(const StateVector& phi, int m);

/// Split of a single determinant, in the same order as split().
std::vector<SplitTerm> split_determinant(const Occupation& occ, Complex coefficient, int m);

}  // namespace pgrade
