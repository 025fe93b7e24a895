// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "pgrade/errors.hpp"

namespace pgrade {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step; divide by the gcd first.
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    std::uint64_t den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") overflows 64 bits");
    }
    result *= num;
  }
  return result;
}

void for_each_combination(int n, int k, const std::function<void(std::span<const int>)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    f(pos);
    int i = k - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, k, [&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

namespace {

void compose(std::span<const int> caps, std::size_t j, int remaining, std::vector<int>& current,
             const std::function<void(std::span<const int>)>& f) {
  if (j == caps.size()) {
    if (remaining == 0) f(current);
    return;
  }
  int tail = 0;
  for (std::size_t t = j + 1; t < caps.size(); ++t) tail += caps[t];
  const int lo = std::max(0, remaining - tail);
  const int hi = std::min(caps[j], remaining);
  for (int v = lo; v <= hi; ++v) {
    current[j] = v;
    compose(caps, j + 1, remaining - v, current, f);
  }
}

}  // namespace

void for_each_composition(std::span<const int> caps, int total,
                          const std::function<void(std::span<const int>)>& f) {
  std::vector<int> current(caps.size(), 0);
  compose(caps, 0, total, current, f);
}

}  // namespace pgrade
