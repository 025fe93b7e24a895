// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/oracle.hpp"

#include <algorithm>

#include "pgrade/combinatorics.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"

namespace pgrade::oracle {

StateVector expand(const GroupProduct& group, std::uint64_t ceiling) {
  const int n = group.particles();
  if (n <= group.dim() && binomial(group.dim(), n) > ceiling) {
    throw ResourceCeilingError("expanded group product exceeds the sector ceiling");
  }
  StateVector out = StateVector::vacuum(group.dim());
  for (const auto& f : group.factors()) out = wedge(out, f);
  return out;
}

Complex overlap_direct(const GroupProduct& bra, const GroupProduct& ket) {
  return inner(expand(bra), expand(ket));
}

Complex matelem_direct(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket) {
  const StateVector b = expand(bra);
  const StateVector k = expand(ket);
  Complex total{};
  for (const auto& [key, lambda] : op.terms()) {
    const StateVector lowered = annihilate_sequence(key.second, k);
    if (lowered.is_zero()) continue;
    total += lambda * inner(b, create_sequence(key.first, lowered));
  }
  return total;
}

Subspace internal_space_direct(const MixedState& state, int p, double rel_tol) {
  const int n = state.particles();
  const int dim = state.dim();
  if (p < 1 || p > n) throw DomainError("internal_space_direct: p outside [1, n]");

  std::vector<StateVector> candidates;
  double largest = 0.0;
  for_each_combination(dim, n - p, [&](std::span<const int> pos) {
    std::vector<int> orbitals;
    for (int i : pos) orbitals.push_back(i + 1);
    const StateVector omega = StateVector::determinant(dim, Occupation::from_indices(orbitals));
    for (const auto& c : state.components()) {
      StateVector v = interior_left(omega, c.state);
      if (v.is_zero()) continue;
      largest = std::max(largest, v.norm());
      candidates.push_back(std::move(v));
    }
  });

  // Modified Gram-Schmidt with one reorthogonalization pass.
  std::vector<StateVector> basis;
  for (StateVector v : candidates) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) v -= inner(u, v) * u;
    }
    const double r = v.norm();
    if (r <= rel_tol * largest) continue;
    basis.push_back((1.0 / r) * v);
  }
  return Subspace(dim, p, std::move(basis));
}

}  // namespace pgrade::oracle
