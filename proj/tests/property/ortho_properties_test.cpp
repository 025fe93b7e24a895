// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "pgrade/fock.hpp"
#include "pgrade/oracle.hpp"
#include "pgrade/ortho.hpp"

using namespace pgrade;
using namespace pgrade::testing;

namespace {

// Two random states over overlapping orbital pools; p drawn inside the admissible range.
struct AnglePair {
  Subspace i1, i2;
};

AnglePair random_internal_pair(Rng& rng) {
  const int dim = uniform_int(rng, 4, 8);
  const int n = uniform_int(rng, 1, 3);
  const int p = uniform_int(rng, 1, n);
  const auto a = random_mixed(rng, dim, n, uniform_int(rng, 1, 2), uniform_int(rng, 1, 3));
  const auto b = random_mixed(rng, dim, n, uniform_int(rng, 1, 2), uniform_int(rng, 1, 3));
  return {internal_space(a, p), internal_space(b, p)};
}

}  // namespace

TEST_SUITE("ortho properties") {
  TEST_CASE("verdict tables are monotone") {
    Rng rng(301);
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int dim = uniform_int(rng, 6, 10);
      const int n1 = uniform_int(rng, 1, 4);
      const int n2 = uniform_int(rng, 1, 4);
      MixedState a = MixedState::pure(StateVector::determinant(dim, {1}));
      MixedState b = a;
      if (trial % 2 == 0) {
        const int shared = uniform_int(rng, 0, std::min(n1, n2) - 1);
        const auto pair = graded_pair(rng, 10, n1, n2, shared, 3);
        a = MixedState::pure(pair.first);
        b = MixedState::pure(pair.second);
      } else {
        a = random_mixed(rng, dim, n1, uniform_int(rng, 1, 2), 2);
        b = random_mixed(rng, dim, n2, uniform_int(rng, 1, 2), 2);
      }
      if (!grade(a, b).is_monotone()) ++violations;
    }
    CHECK(violations == 0);
  }

  TEST_CASE("core-sharing pairs have the expected grade") {
    Rng rng(302);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = uniform_int(rng, 2, 4);
      const int shared = uniform_int(rng, 1, n - 1);
      const auto pair = graded_pair(rng, 10, n, n, shared, 3);
      const auto report = grade(MixedState::pure(pair.first), MixedState::pure(pair.second));
      CHECK(report.grade == shared + 1);
      CHECK(grade_bisect(MixedState::pure(pair.first), MixedState::pure(pair.second)) == shared + 1);
    }
  }

  TEST_CASE("strong orthogonality matches single-annihilation residues") {
    Rng rng(303);
    for (int trial = 0; trial < 60; ++trial) {
      const int dim = 8;
      const auto a = random_normalized(rng, dim, uniform_int(rng, 1, 3), 2);
      const auto b = random_normalized(rng, dim, uniform_int(rng, 1, 3), 2);
      // Residues Ω ↩ Ψ with |Ω| = n - 1 span the 1-internal space.
      const auto ra = oracle::internal_space_direct(MixedState::pure(a), 1);
      const auto rb = oracle::internal_space_direct(MixedState::pure(b), 1);
      const bool residues_orthogonal = max_cross_overlap(ra, rb) < 1e-8;
      CHECK(is_strongly_orthogonal(MixedState::pure(a), MixedState::pure(b)) == residues_orthogonal);
    }
  }

  TEST_CASE("squared cosine and sine operators sum to the identity") {
    Rng rng(304);
    for (int trial = 0; trial < 100; ++trial) {
      const auto [i1, i2] = random_internal_pair(rng);
      const auto ops = araki_operators(i1, i2);
      const auto d = ops.cos2.rows();
      CHECK((ops.cos2 + ops.sin2 - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("fast and faithful angle paths agree") {
    Rng rng(305);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto [i1, i2] = random_internal_pair(rng);
      const auto s = araki_angles(i1, i2);
      const auto fast = expand_to_operator_angles(s.principal, s.dim1, s.dim2, s.dim1 + s.dim2 - s.dim_e);
      const auto slow = operator_angles(i1, i2);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t k = 0; k < fast.size(); ++k) worst = std::max(worst, std::abs(fast[k] - slow[k]));
      int total = 0;
      for (const auto& b : s.blocks) {
        total += b.multiplicity;
        CHECK(b.theta >= 0.0);
        CHECK(b.theta <= std::numbers::pi / 2 + 1e-15);
      }
      CHECK(total == s.dim_e);
    }
    CHECK(worst < 1e-9);
  }

  TEST_CASE("decomposition splits both spaces into mutually orthogonal blocks") {
    Rng rng(306);
    for (int trial = 0; trial < 60; ++trial) {
      const auto [i1, i2] = random_internal_pair(rng);
      const auto parts = araki_decomposition(i1, i2);
      std::vector<Subspace> first, second, blocks;
      for (const auto& c : parts) {
        first.push_back(c.first_part);
        second.push_back(c.second_part);
        blocks.push_back(c.block);
      }
      CHECK(projector_distance(direct_sum(first, i1.dim(), i1.sector()), i1) < 1e-8);
      CHECK(projector_distance(direct_sum(second, i1.dim(), i1.sector()), i2) < 1e-8);
      for (std::size_t x = 0; x < parts.size(); ++x) {
        for (std::size_t y = 0; y < parts.size(); ++y) {
          if (x == y) continue;
          CHECK(max_cross_overlap(parts[x].first_part, parts[y].second_part) < 1e-8);
          CHECK(max_cross_overlap(blocks[x], blocks[y]) < 1e-8);
        }
      }
    }
  }

  TEST_CASE("orthogonality holds exactly when every angle is a right angle") {
    Rng rng(307);
    int orthogonal_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const int n = uniform_int(rng, 2, 3);
      const auto pair = graded_pair(rng, 8, n, n, uniform_int(rng, 0, n - 1), 2);
      const auto a = MixedState::pure(pair.first);
      const auto b = MixedState::pure(pair.second);
      const int p = uniform_int(rng, 1, n);
      const auto s = araki_angles(a, b, p);
      bool all_right = true;
      for (const auto& blk : s.blocks) all_right = all_right && std::abs(blk.theta - std::numbers::pi / 2) < 1e-9;
      const bool orth = is_p_orthogonal(a, b, p);
      orthogonal_seen += orth;
      CHECK(orth == all_right);
    }
    CHECK(orthogonal_seen > 10);
  }
}
