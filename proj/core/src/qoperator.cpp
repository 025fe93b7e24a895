// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/qoperator.hpp"

#include <algorithm>
#include <cmath>

#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"

namespace pgrade {

QOperator::QOperator(int rank, TermMap terms, Closure closure, double tol)
    : rank_(rank), terms_(std::move(terms)) {
  if (rank < 1) throw DomainError("operator rank must be >= 1");
  for (const auto& [key, lambda] : terms_) {
    for (const auto* tuple : {&key.first, &key.second}) {
      if (static_cast<int>(tuple->size()) != rank) {
        throw DomainError("operator index tuple length differs from rank " + std::to_string(rank));
      }
      for (int i : *tuple) {
        if (i < 1) throw DomainError("operator orbital indices start at 1");
      }
    }
  }
  TermMap missing;
  for (const auto& [key, lambda] : terms_) {
    const Key mirror{key.second, key.first};
    auto it = terms_.find(mirror);
    if (it == terms_.end()) {
      if (closure == Closure::validate) {
        throw DomainError("operator is not Hermitian: missing partner of a term");
      }
      missing.emplace(mirror, std::conj(lambda));
    } else if (std::abs(it->second - std::conj(lambda)) > tol) {
      throw DomainError("operator is not Hermitian: lambda(I,J) != conj(lambda(J,I))");
    }
  }
  terms_.merge(missing);
}

QOperator QOperator::number_operator(int dim) {
  TermMap terms;
  for (int i = 1; i <= dim; ++i) terms.emplace(Key{{i}, {i}}, 1.0);
  return QOperator(1, std::move(terms), Closure::validate);
}

int QOperator::max_orbital() const noexcept {
  int top = 0;
  for (const auto& [key, lambda] : terms_) {
    for (int i : key.first) top = std::max(top, i);
    for (int j : key.second) top = std::max(top, j);
  }
  return top;
}

StateVector QOperator::apply(const StateVector& psi) const {
  if (psi.particles() < rank_) {
    throw DomainError("operator rank exceeds the particle number of its argument");
  }
  if (max_orbital() > psi.dim()) throw ShapeError("operator references orbitals beyond the basis");
  StateVector out(psi.dim(), psi.particles());
  for (const auto& [key, lambda] : terms_) {
    StateVector v = create_sequence(key.first, annihilate_sequence(key.second, psi));
    if (v.is_zero()) continue;
    v *= lambda;
    out += v;
  }
  return out;
}

}  // namespace pgrade
