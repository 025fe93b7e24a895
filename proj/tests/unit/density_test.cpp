// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "pgrade/combinatorics.hpp"
#include "pgrade/density.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"

using namespace pgrade;

namespace {

MixedState pure_det(int dim, std::initializer_list<int> o) {
  return MixedState::pure(StateVector::determinant(dim, o));
}

Subspace orbitals(int dim, std::initializer_list<int> list) {
  std::vector<StateVector> basis;
  for (int i : list) basis.push_back(StateVector::determinant(dim, Occupation::from_indices({i})));
  return Subspace(dim, 1, std::move(basis));
}

}  // namespace

TEST_SUITE("density") {
  TEST_CASE("one-particle matrix of a determinant is its occupation") {
    const auto d = rdm(pure_det(5, {1, 2}), 1);
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        const Complex expect = (i == j && i <= 2) ? 1.0 : 0.0;
        CHECK(std::abs(d.element(Occupation::from_indices({i}), Occupation::from_indices({j})) -
                       expect) < 1e-14);
      }
    }
    CHECK(d.trace() == doctest::Approx(2.0));
  }

  TEST_CASE("top sector is the projector on the state") {
    const auto d = rdm(pure_det(4, {1, 2}), 2);
    CHECK(d.rows.size() == 1);
    CHECK(std::abs(d.element(Occupation::from_indices({1, 2}), Occupation::from_indices({1, 2})) -
                   1.0) < 1e-14);
  }

  TEST_CASE("zero sector is the squared norm") {
    const auto psi = (StateVector::determinant(4, {1, 2}) + StateVector::determinant(4, {3, 4}));
    const auto d = rdm(MixedState::pure(psi), 0);
    CHECK(d.matrix.rows() == 1);
    CHECK(std::abs(d.matrix(0, 0) - 1.0) < 1e-14);
  }

  TEST_CASE("internal space examples") {
    for (int n = 1; n <= 5; ++n) {
      std::vector<int> occ(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) occ[static_cast<std::size_t>(i)] = i + 1;
      const auto state = MixedState::pure(StateVector::determinant(7, Occupation::from_indices(occ)));
      for (int p = 1; p <= n; ++p) {
        CHECK(internal_space(state, p).dimension() == static_cast<int>(binomial(n, p)));
      }
    }
    const auto psi2 = StateVector::determinant(8, {1, 7}) + StateVector::determinant(8, {2, 8});
    const auto i1 = internal_space(MixedState::pure(psi2), 1);
    CHECK(i1.dimension() == 4);
    CHECK(projector_distance(i1, orbitals(8, {1, 2, 7, 8})) < 1e-8);

    const auto top = internal_space(MixedState::pure(psi2), 2);
    REQUIRE(top.dimension() == 1);
    CHECK(std::abs(std::abs(inner(top.basis()[0], psi2.normalized())) - 1.0) < 1e-12);
  }

  TEST_CASE("external space examples") {
    const auto state = pure_det(4, {1, 2});
    const auto e = external_space(state, 1);
    CHECK(projector_distance(e, orbitals(4, {3, 4})) < 1e-8);
    for (int p = 1; p <= 2; ++p) {
      CHECK(internal_space(state, p).dimension() + external_space(state, p).dimension() ==
            static_cast<int>(binomial(4, p)));
    }
  }

  TEST_CASE("mixture external space is the intersection of the pure ones") {
    const auto a = StateVector::determinant(6, {1, 2}) + StateVector::determinant(6, {3, 4});
    const auto b = StateVector::determinant(6, {2, 5});
    const MixedState mix({{0.5, a.normalized()}, {0.5, b}});
    const auto e = external_space(mix, 1);
    CHECK(projector_distance(e, orbitals(6, {6})) < 1e-8);
    CHECK(contained_in(e, external_space(MixedState::pure(a), 1)));
    CHECK(contained_in(e, external_space(MixedState::pure(b), 1)));
  }

  TEST_CASE("range and ceiling errors") {
    const auto state = pure_det(5, {1, 2});
    CHECK_THROWS_AS(rdm(state, 3), DomainError);
    CHECK_THROWS_AS(rdm(state, -1), DomainError);
    CHECK_THROWS_AS(internal_space(state, 0), DomainError);
    CHECK_THROWS_AS(external_space(state, 3), DomainError);
    const auto wide = pure_det(40, {1, 2, 3, 4});
    CHECK_THROWS_AS(rdm(wide, 4), ResourceCeilingError);
    CHECK_NOTHROW(rdm(wide, 4, DensityOptions{1e-10, 200000}));
  }

  TEST_CASE("mixed state validation") {
    const auto a = StateVector::determinant(3, {1});
    const auto b = StateVector::determinant(3, {2});
    CHECK_THROWS_AS(MixedState({{0.5, a}, {0.6, b}}), DomainError);
    CHECK_THROWS_AS(MixedState({{1.0, 2.0 * a}}), DomainError);
    CHECK_THROWS_AS(MixedState({{-0.5, a}, {1.5, b}}), DomainError);
    CHECK_THROWS_AS(MixedState({{0.5, a}, {0.5, StateVector::determinant(3, {1, 2})}}), ShapeError);
    CHECK(MixedState::pure(3.0 * a).components()[0].state == a);
  }
}
