// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file occupation.hpp
 * @brief Ordered orbital sets encoding Slater determinants as bit masks.
 *
 * Orbitals are numbered from 1. Orbital i lives in bit (i - 1). Orbitals
 * 1..64 sit in a single inline word; larger indices spill into a heap
 * vector that is kept trimmed so equal sets compare equal.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pgrade {

class Occupation {
 public:
  Occupation() = default;

  /// Builds from strictly increasing 1-based orbital indices. Throws DomainError otherwise.
  static Occupation from_indices(std::span<const int> indices);
  static Occupation from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  /// Orbitals lo..hi inclusive.
  static Occupation range(int lo, int hi);

  bool contains(int orbital) const noexcept;
  int count() const noexcept;
  bool empty() const noexcept { return low_ == 0 && high_.empty(); }
  /// Number of occupied orbitals with index strictly below `orbital`.
  int count_below(int orbital) const noexcept;
  /// Largest occupied index, 0 when empty.
  int max_orbital() const noexcept;

  std::vector<int> indices() const;

  void insert(int orbital);
  void erase(int orbital);

  bool disjoint(const Occupation& other) const noexcept;
  bool subset_of(const Occupation& other) const noexcept;

  friend Occupation operator|(const Occupation& a, const Occupation& b);
  friend Occupation operator&(const Occupation& a, const Occupation& b);
  /// Set difference a \ b.
  friend Occupation operator-(const Occupation& a, const Occupation& b);

  friend bool operator==(const Occupation& a, const Occupation& b) noexcept = default;
  /// Orders as the unsigned integer whose bits are the mask.
  friend std::strong_ordering operator<=>(const Occupation& a, const Occupation& b) noexcept;

  std::size_t hash() const noexcept;

  /// Renders as "[1 2 5]".
  std::string to_string() const;

 private:
  std::uint64_t word(std::size_t w) const noexcept {
    return w == 0 ? low_ : (w - 1 < high_.size() ? high_[w - 1] : 0);
  }
  std::size_t word_count() const noexcept { return 1 + high_.size(); }
  void set_word(std::size_t w, std::uint64_t bits);
  void trim() noexcept;

  std::uint64_t low_ = 0;
  std::vector<std::uint64_t> high_;
};

/**
 * Sign of the permutation that sorts the concatenation a // b, or 0 when the
 * two sets intersect. This is the sign picked up by det(a) ∧ det(b).
 */
int wedge_sign(const Occupation& a, const Occupation& b) noexcept;

}  // namespace pgrade

template <>
struct std::hash<pgrade::Occupation> {
  std::size_t operator()(const pgrade::Occupation& o) const noexcept { return o.hash(); }
};
