// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/fock.hpp"

#include "pgrade/combinatorics.hpp"
#include "pgrade/errors.hpp"

namespace pgrade {

namespace {

void require_same_basis(const StateVector& a, const StateVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ShapeError(std::string(op) + ": orbital basis mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
}

int parity_sign(int count) { return (count & 1) ? -1 : 1; }

}  // namespace

StateVector wedge(const StateVector& a, const StateVector& b) {
  require_same_basis(a, b, "wedge");
  const int n = a.particles() + b.particles();
  StateVector out(a.dim(), n);
  for (const auto& [oa, ca] : a.terms()) {
    for (const auto& [ob, cb] : b.terms()) {
      if (int s = wedge_sign(oa, ob)) out.add(oa | ob, static_cast<double>(s) * ca * cb);
    }
  }
  out.prune();
  return out;
}

StateVector wedge_all(std::span<const StateVector> factors, int dim) {
  StateVector out = StateVector::vacuum(dim);
  for (const auto& f : factors) out = wedge(out, f);
  return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
  require_same_basis(a, b, "inner");
  if (a.particles() != b.particles()) {
    throw ShapeError("inner: particle-number mismatch (" + std::to_string(a.particles()) +
                     " vs " + std::to_string(b.particles()) + ")");
  }
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Complex s{};
  for (const auto& [occ, c] : small.terms()) {
    const Complex other = large.coefficient(occ);
    if (other == Complex{}) continue;
    s += (&small == &a) ? std::conj(c) * other : std::conj(other) * c;
  }
  return s;
}

StateVector interior_left(const StateVector& psi, const StateVector& phi) {
  require_same_basis(psi, phi, "interior_left");
  if (psi.particles() > phi.particles()) {
    throw DomainError("interior_left: left operand has more particles than right operand");
  }
  StateVector out(phi.dim(), phi.particles() - psi.particles());
  for (const auto& [p, cp] : psi.terms()) {
    for (const auto& [q, cq] : phi.terms()) {
      if (!p.subset_of(q)) continue;
      const Occupation rest = q - p;
      out.add(rest, static_cast<double>(wedge_sign(p, rest)) * std::conj(cp) * cq);
    }
  }
  out.prune();
  return out;
}

StateVector interior_right(const StateVector& phi, const StateVector& psi) {
  require_same_basis(psi, phi, "interior_right");
  if (psi.particles() > phi.particles()) {
    throw DomainError("interior_right: right operand has more particles than left operand");
  }
  StateVector out(phi.dim(), phi.particles() - psi.particles());
  for (const auto& [p, cp] : psi.terms()) {
    for (const auto& [q, cq] : phi.terms()) {
      if (!p.subset_of(q)) continue;
      const Occupation rest = q - p;
      out.add(rest, static_cast<double>(wedge_sign(rest, p)) * std::conj(cp) * cq);
    }
  }
  out.prune();
  return out;
}

StateVector annihilate_sequence(std::span<const int> orbitals, const StateVector& psi) {
  const int q = static_cast<int>(orbitals.size());
  if (q > psi.particles()) {
    throw DomainError("annihilate_sequence: more annihilators than particles");
  }
  StateVector out(psi.dim(), psi.particles() - q);
  for (const auto& [occ, c] : psi.terms()) {
    Occupation current = occ;
    int sign = 1;
    bool alive = true;
    for (int j : orbitals) {
      if (!current.contains(j)) {
        alive = false;
        break;
      }
      sign *= parity_sign(current.count_below(j));
      current.erase(j);
    }
    if (alive) out.add(current, static_cast<double>(sign) * c);
  }
  out.prune();
  return out;
}

StateVector create_sequence(std::span<const int> orbitals, const StateVector& psi) {
  const int q = static_cast<int>(orbitals.size());
  for (int i : orbitals) {
    if (i < 1 || i > psi.dim()) throw DomainError("create_sequence: orbital out of range");
  }
  StateVector out(psi.dim(), psi.particles() + q);
  for (const auto& [occ, c] : psi.terms()) {
    Occupation current = occ;
    int sign = 1;
    bool alive = true;
    for (auto it = orbitals.rbegin(); it != orbitals.rend(); ++it) {
      if (current.contains(*it)) {
        alive = false;
        break;
      }
      sign *= parity_sign(current.count_below(*it));
      current.insert(*it);
    }
    if (alive) out.add(current, static_cast<double>(sign) * c);
  }
  out.prune();
  return out;
}

std::vector<SplitTerm> split_determinant(const Occupation& occ, Complex coefficient, int m) {
  const std::vector<int> orbitals = occ.indices();
  const int p = static_cast<int>(orbitals.size());
  if (m < 0 || m > p) {
    throw DomainError("split: part length " + std::to_string(m) + " outside [0, " +
                      std::to_string(p) + "]");
  }
  std::vector<SplitTerm> out;
  out.reserve(binomial(p, m));
  for_each_combination(p, m, [&](std::span<const int> positions) {
    Occupation left;
    for (int pos : positions) left.insert(orbitals[static_cast<std::size_t>(pos)]);
    Occupation right = occ - left;
    // Positions and orbitals are co-monotone, so ρ(I, Ī) is the wedge sign of the parts.
    out.push_back({wedge_sign(left, right), coefficient, std::move(left), std::move(right)});
  });
  return out;
}

std::vector<SplitTerm> split(const StateVector& phi, int m) {
  if (m < 0 || m > phi.particles()) {
    throw DomainError("split: part length " + std::to_string(m) + " outside [0, " +
                      std::to_string(phi.particles()) + "]");
  }
  std::vector<SplitTerm> out;
  for (const auto& [occ, c] : phi.terms()) {
    auto part = split_determinant(occ, c, m);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace pgrade
