// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <string>

#include "pgrade/occupation.hpp"

namespace pgrade {

using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped after every algebraic operation.
inline constexpr double kZeroPrune = 1e-14;

/**
 * Sparse linear combination of ordered-occupation determinants with a fixed
 * particle number over an orthonormal orbital basis of size `dim`.
 *
 * Determinants with increasing orbital order are orthonormal; there is no n!
 * prefactor anywhere. Normalization is not an invariant.
 */
class StateVector {
 public:
  using TermMap = std::map<Occupation, Complex>;

  StateVector() = default;
  /// Zero vector in the n-particle sector. Throws DomainError for dim < 1 or n < 0.
  StateVector(int dim, int particles);

  static StateVector vacuum(int dim);
  static StateVector determinant(int dim, const Occupation& occ, Complex coefficient = 1.0);
  static StateVector determinant(int dim, std::initializer_list<int> orbitals,
                                 Complex coefficient = 1.0);

  int dim() const noexcept { return dim_; }
  int particles() const noexcept { return particles_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex coefficient(const Occupation& occ) const;

  /// Accumulates c into the coefficient of occ. Call prune() once the build is done.
  void add(const Occupation& occ, Complex c);
  /// Drops coefficients with |c| < kZeroPrune.
  void prune();

  double norm() const;
  /// Throws DomainError on the zero vector.
  StateVector normalized() const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Complex s);

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(Complex s, StateVector a) { return a *= s; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

  /// Human-readable "(1+0i)[1 2] + (-1+0i)[3 4]".
  std::string to_string() const;

 private:
  void check_compatible(const StateVector& other) const;

  int dim_ = 1;
  int particles_ = 0;
  TermMap terms_;
};

/// Largest coefficient-wise |a - b| over the union of supports. Shapes must agree.
double max_abs_difference(const StateVector& a, const StateVector& b);

}  // namespace pgrade
