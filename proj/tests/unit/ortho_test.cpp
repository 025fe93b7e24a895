// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"
#include "pgrade/ortho.hpp"

using namespace pgrade;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

MixedState det(int dim, std::vector<int> o) {
  return MixedState::pure(StateVector::determinant(dim, Occupation::from_indices(o)));
}

std::vector<int> iota(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// Ψ1 = φ1...φn, Ψ2 = φ1...φ(n-p) φ(n+1)...φ(n+p).
std::pair<MixedState, MixedState> shifted_pair(int n, int p) {
  auto second = iota(1, n - p);
  for (int i = n + 1; i <= n + p; ++i) second.push_back(i);
  return {det(n + p, iota(1, n)), det(n + p, second)};
}

std::pair<MixedState, MixedState> eight_orbital_pair() {
  const auto a = StateVector::determinant(8, {1, 2, 3}) + StateVector::determinant(8, {4, 5, 6});
  const auto b = StateVector::determinant(8, {1, 7}) + StateVector::determinant(8, {2, 8});
  return {MixedState::pure(a), MixedState::pure(b)};
}

Subspace line(int dim, double alpha) {
  StateVector v = StateVector::determinant(dim, {1}, std::cos(alpha)) +
                  StateVector::determinant(dim, {2}, std::sin(alpha));
  return Subspace(dim, 1, {v});
}

}  // namespace

TEST_SUITE("ortho") {
  TEST_CASE("p-orthogonality examples") {
    CHECK(is_p_orthogonal(det(5, {1, 2, 3}), det(5, {1, 4, 5}), 2));
    CHECK_FALSE(is_p_orthogonal(det(5, {1, 2, 3}), det(5, {1, 4, 5}), 1));
    for (int n = 3; n <= 5; ++n) {
      for (int p = 1; p < n; ++p) {
        auto [a, b] = shifted_pair(n, p);
        CHECK_FALSE(is_p_orthogonal(a, b, n - p));
        CHECK(is_p_orthogonal(a, b, n - p + 1));
      }
    }
    auto [a, b] = eight_orbital_pair();
    CHECK_FALSE(is_p_orthogonal(a, b, 1));
    CHECK_THROWS_AS(is_p_orthogonal(a, b, 3), DomainError);
    CHECK_THROWS_AS(is_p_orthogonal(a, b, 0), DomainError);
  }

  TEST_CASE("grade examples") {
    for (int n = 3; n <= 5; ++n) {
      for (int p = 1; p < n; ++p) {
        auto [a, b] = shifted_pair(n, p);
        const auto report = grade(a, b);
        REQUIRE(report.grade.has_value());
        CHECK(*report.grade == n - p + 1);
        CHECK(report.is_monotone());
        CHECK(grade_bisect(a, b) == report.grade);
      }
    }
    auto [a, b] = eight_orbital_pair();
    const auto report = grade(a, b);
    CHECK(report.grade == 2);
    CHECK(report.max_p() == 2);
    CHECK(report.max_overlap[0] > 0.1);
    const auto same = grade(a, a);
    CHECK_FALSE(same.grade.has_value());
    CHECK_FALSE(grade_bisect(a, a).has_value());
  }

  TEST_CASE("strong orthogonality examples") {
    CHECK(is_strongly_orthogonal(det(4, {1, 2}), det(4, {3, 4})));
    CHECK_FALSE(is_strongly_orthogonal(det(4, {1, 2}), det(4, {1, 3})));
    auto [a, b] = eight_orbital_pair();
    CHECK_FALSE(is_strongly_orthogonal(a, b));
  }

  TEST_CASE("orthogonal pair has one right-angle block") {
    const auto s = araki_angles(det(5, {1, 2, 3}), det(5, {1, 4, 5}), 2);
    REQUIRE(s.blocks.size() == 1);
    CHECK(s.blocks[0].theta == doctest::Approx(kHalfPi).epsilon(1e-12));
    CHECK(s.blocks[0].multiplicity == 6);
    CHECK(s.dim_e == 6);

    const auto parts = araki_decomposition(det(5, {1, 2, 3}), det(5, {1, 4, 5}), 2);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].block.dimension() == 6);
    CHECK(projector_distance(parts[0].first_part, internal_space(det(5, {1, 2, 3}), 2)) < 1e-8);
    CHECK(projector_distance(parts[0].second_part, internal_space(det(5, {1, 4, 5}), 2)) < 1e-8);
  }

  TEST_CASE("nested spaces give zero angles with the smaller dimension") {
    const auto small = det(6, {1, 2});
    const auto big = MixedState::pure(StateVector::determinant(6, {1, 2, 3}));
    // I^1 of [1 2] is inside I^1 of [1 2 3].
    const auto s = araki_angles(small, big, 1);
    REQUIRE(s.blocks.size() == 2);
    CHECK(std::abs(s.blocks[0].theta) < 1e-12);
    CHECK(s.blocks[0].multiplicity == 2);
    CHECK(s.blocks[1].theta == doctest::Approx(kHalfPi));
    CHECK(s.blocks[1].multiplicity == 1);
    CHECK(s.principal.size() == 2);
    for (double t : s.principal) CHECK(std::abs(t) < 1e-12);

    const auto same = araki_decomposition(big, big, 2);
    REQUIRE(same.size() == 1);
    CHECK(std::abs(same[0].theta) < 1e-12);
    CHECK(same[0].block.dimension() == 3);
  }

  TEST_CASE("two lines at angle alpha") {
    for (double alpha : {1e-7, 0.3, 0.7853981633974483, 1.2, kHalfPi - 1e-7}) {
      const auto a = line(3, 0.0);
      const auto b = line(3, alpha);
      const auto s = araki_angles(a, b);
      REQUIRE(s.principal.size() == 1);
      CHECK(std::abs(s.principal[0] - alpha) < 1e-12);
      REQUIRE(s.blocks.size() == 1);
      CHECK(std::abs(s.blocks[0].theta - alpha) < 1e-9);
      CHECK(s.blocks[0].multiplicity == 2);

      const auto parts = araki_decomposition(a, b);
      REQUIRE(parts.size() == 1);
      CHECK(parts[0].first_part.dimension() == 1);
      CHECK(parts[0].second_part.dimension() == 1);
      const double c = std::abs(inner(parts[0].first_part.basis()[0], parts[0].second_part.basis()[0]));
      CHECK(std::abs(c - std::cos(alpha)) < 1e-12);
    }
  }

  TEST_CASE("multiplicity expansion") {
    // One shared direction, one generic pair, one unpaired direction.
    const auto out = expand_to_operator_angles({0.0, 0.4}, 2, 3, 1);
    REQUIRE(out.size() == 4);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 0.4);
    CHECK(out[2] == 0.4);
    CHECK(out[3] == kHalfPi);
  }

  TEST_CASE("empty spaces are rejected") {
    CHECK_THROWS_AS(araki_angles(Subspace(3, 1), line(3, 0.1)), DomainError);
    CHECK_THROWS_AS(araki_angles(line(3, 0.1), line(4, 0.1)), ShapeError);
  }
}
