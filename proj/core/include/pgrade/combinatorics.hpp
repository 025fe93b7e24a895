// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pgrade {

/// Exact binomial coefficient. Returns 0 for k < 0 or k > n; throws DomainError on overflow.
std::uint64_t binomial(int n, int k);

/// Calls f(positions) for every strictly increasing k-subset of {0..n-1}, lexicographically.
void for_each_combination(int n, int k, const std::function<void(std::span<const int>)>& f);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/**
 * Calls f(lengths) for every tuple with 0 <= lengths[j] <= caps[j] and
 * sum(lengths) == total, in lexicographic order of the tuple.
 */
void for_each_composition(std::span<const int> caps, int total,
                          const std::function<void(std::span<const int>)>& f);

}  // namespace pgrade
