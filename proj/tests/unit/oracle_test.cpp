// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "generators.hpp"
#include "pgrade/combinatorics.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"
#include "pgrade/oracle.hpp"

using namespace pgrade;
using namespace pgrade::testing;

namespace {

StateVector det(int dim, std::initializer_list<int> o, Complex c = 1.0) {
  return StateVector::determinant(dim, o, c);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("expand examples") {
    CHECK(oracle::expand(GroupProduct({det(4, {1, 2}), det(4, {3, 4})})) == det(4, {1, 2, 3, 4}));
    CHECK(oracle::expand(GroupProduct({det(4, {3, 4}), det(4, {1})})) == det(4, {1, 3, 4}));
    CHECK(oracle::expand(GroupProduct({det(4, {1, 2}), det(4, {2, 3})})).is_zero());
    CHECK_THROWS_AS(oracle::expand(GroupProduct({det(40, {1, 2}), det(40, {3, 4})}), 1000),
                    ResourceCeilingError);
  }

  TEST_CASE("overlap examples") {
    const auto psi = (det(5, {1, 2}) + det(5, {3, 4}, Complex(0, 1))).normalized();
    CHECK(std::abs(oracle::overlap_direct(GroupProduct({psi}), GroupProduct({psi})) - 1.0) < 1e-14);
    const GroupProduct bra({det(6, {1, 2}) + det(6, {1, 3}), det(6, {4}) + det(6, {5}, 2.0)});
    const GroupProduct ket({det(6, {2, 3}) + det(6, {1, 3}, 3.0), det(6, {5})});
    const Complex expect = inner(bra.factor(0), ket.factor(0)) * inner(bra.factor(1), ket.factor(1));
    CHECK(std::abs(oracle::overlap_direct(bra, ket) - expect) < 1e-12);
  }

  TEST_CASE("matrix element examples") {
    Rng rng(501);
    const GroupProduct a({random_state(rng, 7, 2, 3), random_state(rng, 7, 1, 2)});
    const GroupProduct b({random_state(rng, 7, 2, 3), random_state(rng, 7, 1, 2)});
    const Complex n_elem = oracle::matelem_direct(a, QOperator::number_operator(7), b);
    CHECK(std::abs(n_elem - 3.0 * oracle::overlap_direct(a, b)) < 1e-12);
    const auto op = random_operator(rng, 1, 6, 8);
    CHECK(std::abs(oracle::matelem_direct(GroupProduct({det(6, {1, 2, 3})}), op,
                                          GroupProduct({det(6, {1, 4, 5})}))) < 1e-12);
    const auto op2 = random_operator(rng, 2, 7, 8);
    CHECK(std::abs(oracle::matelem_direct(a, op2, b) - matelem(a, op2, b).value) < 1e-10);
  }

  TEST_CASE("internal space by exhaustive annihilation") {
    const auto d = MixedState::pure(det(6, {1, 3, 4, 6}));
    for (int p = 1; p <= 4; ++p) {
      CHECK(oracle::internal_space_direct(d, p).dimension() == static_cast<int>(binomial(4, p)));
    }
    const auto psi = (det(6, {1, 2, 3}) + det(6, {4, 5, 6}, -2.0)).normalized();
    const auto top = oracle::internal_space_direct(MixedState::pure(psi), 3);
    REQUIRE(top.dimension() == 1);
    CHECK(std::abs(std::abs(inner(top.basis()[0], psi)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(oracle::internal_space_direct(d, 0), DomainError);
  }

  TEST_CASE("exhaustive and spectral internal spaces agree") {
    Rng rng(502);
    for (int trial = 0; trial < 80; ++trial) {
      const int dim = uniform_int(rng, 3, 8);
      const int n = uniform_int(rng, 1, std::min(dim, 4));
      const int p = uniform_int(rng, 1, n);
      const auto state = random_mixed(rng, dim, n, uniform_int(rng, 1, 2), 4);
      CHECK(projector_distance(oracle::internal_space_direct(state, p), internal_space(state, p)) < 1e-8);
    }
  }
}
