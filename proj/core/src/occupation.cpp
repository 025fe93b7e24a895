// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/occupation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pgrade/errors.hpp"

namespace pgrade {

namespace {

constexpr int kWordBits = 64;

std::size_t word_of(int orbital) { return static_cast<std::size_t>(orbital - 1) / kWordBits; }
int bit_of(int orbital) { return (orbital - 1) % kWordBits; }

}  // namespace

Occupation Occupation::from_indices(std::span<const int> indices) {
  Occupation occ;
  int previous = 0;
  for (int i : indices) {
    if (i < 1) throw DomainError("orbital indices start at 1, got " + std::to_string(i));
    if (i <= previous) {
      throw DomainError("orbital indices must be strictly increasing (Pauli exclusion)");
    }
    occ.insert(i);
    previous = i;
  }
  return occ;
}

Occupation Occupation::range(int lo, int hi) {
  Occupation occ;
  for (int i = lo; i <= hi; ++i) occ.insert(i);
  return occ;
}

bool Occupation::contains(int orbital) const noexcept {
  if (orbital < 1) return false;
  return (word(word_of(orbital)) >> bit_of(orbital)) & 1u;
}

int Occupation::count() const noexcept {
  int c = std::popcount(low_);
  for (auto w : high_) c += std::popcount(w);
  return c;
}

int Occupation::count_below(int orbital) const noexcept {
  if (orbital <= 1) return 0;
  const std::size_t wlim = word_of(orbital);
  const int blim = bit_of(orbital);
  int c = 0;
  for (std::size_t w = 0; w < std::min(wlim, word_count()); ++w) c += std::popcount(word(w));
  if (wlim < word_count() && blim > 0) {
    c += std::popcount(word(wlim) & ((std::uint64_t{1} << blim) - 1));
  }
  return c;
}

int Occupation::max_orbital() const noexcept {
  for (std::size_t w = word_count(); w-- > 0;) {
    if (auto bits = word(w)) {
      return static_cast<int>(w) * kWordBits + (kWordBits - std::countl_zero(bits));
    }
  }
  return 0;
}

std::vector<int> Occupation::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::size_t w = 0; w < word_count(); ++w) {
    for (auto bits = word(w); bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(bits) + 1);
    }
  }
  return out;
}

void Occupation::set_word(std::size_t w, std::uint64_t bits) {
  if (w == 0) {
    low_ = bits;
    return;
  }
  if (high_.size() < w) high_.resize(w, 0);
  high_[w - 1] = bits;
  trim();
}

void Occupation::trim() noexcept {
  while (!high_.empty() && high_.back() == 0) high_.pop_back();
}

void Occupation::insert(int orbital) {
  if (orbital < 1) throw DomainError("orbital indices start at 1");
  const auto w = word_of(orbital);
  set_word(w, word(w) | (std::uint64_t{1} << bit_of(orbital)));
}

void Occupation::erase(int orbital) {
  if (orbital < 1) return;
  const auto w = word_of(orbital);
  if (w >= word_count()) return;
  set_word(w, word(w) & ~(std::uint64_t{1} << bit_of(orbital)));
}

bool Occupation::disjoint(const Occupation& other) const noexcept {
  const auto n = std::min(word_count(), other.word_count());
  for (std::size_t w = 0; w < n; ++w) {
    if (word(w) & other.word(w)) return false;
  }
  return true;
}

bool Occupation::subset_of(const Occupation& other) const noexcept {
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (word(w) & ~other.word(w)) return false;
  }
  return true;
}

Occupation operator|(const Occupation& a, const Occupation& b) {
  Occupation out;
  const auto n = std::max(a.word_count(), b.word_count());
  for (std::size_t w = n; w-- > 0;) out.set_word(w, a.word(w) | b.word(w));
  return out;
}

Occupation operator&(const Occupation& a, const Occupation& b) {
  Occupation out;
  const auto n = std::min(a.word_count(), b.word_count());
  for (std::size_t w = n; w-- > 0;) out.set_word(w, a.word(w) & b.word(w));
  return out;
}

Occupation operator-(const Occupation& a, const Occupation& b) {
  Occupation out;
  for (std::size_t w = a.word_count(); w-- > 0;) out.set_word(w, a.word(w) & ~b.word(w));
  return out;
}

std::strong_ordering operator<=>(const Occupation& a, const Occupation& b) noexcept {
  if (auto c = a.high_.size() <=> b.high_.size(); c != 0) return c;
  for (std::size_t w = a.word_count(); w-- > 0;) {
    if (auto c = a.word(w) <=> b.word(w); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Occupation::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(low_);
  for (auto w : high_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Occupation::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int i : indices()) {
    if (!first) os << ' ';
    os << i;
    first = false;
  }
  os << ']';
  return os.str();
}

int wedge_sign(const Occupation& a, const Occupation& b) noexcept {
  if (!a.disjoint(b)) return 0;
  // Inversions of a//b: pairs (x in a, y in b) with x > y.
  const int na = a.count();
  int inversions = 0;
  for (int y : b.indices()) inversions += na - a.count_below(y);
  return (inversions & 1) ? -1 : 1;
}

}  // namespace pgrade
