// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/state_vector.hpp"

#include <cmath>
#include <sstream>

#include "pgrade/errors.hpp"

namespace pgrade {

StateVector::StateVector(int dim, int particles) : dim_(dim), particles_(particles) {
  if (dim < 1) throw DomainError("orbital basis dimension must be >= 1");
  // Sectors with more particles than orbitals exist but are {0}.
  if (particles < 0) throw DomainError("particle number must be >= 0");
}

StateVector StateVector::vacuum(int dim) {
  StateVector v(dim, 0);
  v.terms_.emplace(Occupation{}, 1.0);
  return v;
}

StateVector StateVector::determinant(int dim, const Occupation& occ, Complex coefficient) {
  if (occ.max_orbital() > dim) {
    throw DomainError("occupation " + occ.to_string() + " exceeds basis dimension " +
                      std::to_string(dim));
  }
  StateVector v(dim, occ.count());
  v.add(occ, coefficient);
  v.prune();
  return v;
}

StateVector StateVector::determinant(int dim, std::initializer_list<int> orbitals,
                                     Complex coefficient) {
  return determinant(dim, Occupation::from_indices(orbitals), coefficient);
}

Complex StateVector::coefficient(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex{} : it->second;
}

void StateVector::add(const Occupation& occ, Complex c) {
  if (occ.count() != particles_ || occ.max_orbital() > dim_) {
    throw ShapeError("occupation " + occ.to_string() + " does not fit a " +
                     std::to_string(particles_) + "-particle state over " +
                     std::to_string(dim_) + " orbitals");
  }
  if (c == Complex{}) return;
  terms_[occ] += c;
}

void StateVector::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kZeroPrune; });
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& [occ, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  StateVector out = *this;
  for (auto& [occ, c] : out.terms_) c /= n;
  return out;
}

void StateVector::check_compatible(const StateVector& other) const {
  if (dim_ != other.dim_) throw ShapeError("orbital basis mismatch");
  if (particles_ != other.particles_) throw ShapeError("particle-number mismatch");
}

StateVector& StateVector::operator+=(const StateVector& other) {
  check_compatible(other);
  for (const auto& [occ, c] : other.terms_) terms_[occ] += c;
  prune();
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  check_compatible(other);
  for (const auto& [occ, c] : other.terms_) terms_[occ] -= c;
  prune();
  return *this;
}

StateVector& StateVector::operator*=(Complex s) {
  for (auto& [occ, c] : terms_) c *= s;
  prune();
  return *this;
}

std::string StateVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [occ, c] : terms_) {
    if (!first) os << " + ";
    os << c << occ.to_string();
    first = false;
  }
  return os.str();
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim() || a.particles() != b.particles()) {
    throw ShapeError("max_abs_difference: shape mismatch");
  }
  double worst = 0.0;
  for (const auto& [occ, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(occ)));
  for (const auto& [occ, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(occ)));
  return worst;
}

}  // namespace pgrade
