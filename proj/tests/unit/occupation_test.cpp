// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include <unordered_set>

#include "doctest.h"
#include "pgrade/combinatorics.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/occupation.hpp"
#include "pgrade/state_vector.hpp"

using namespace pgrade;

TEST_SUITE("occupation") {
  TEST_CASE("construction and queries") {
    const auto o = Occupation::from_indices({1, 3, 70});
    CHECK(o.count() == 3);
    CHECK(o.contains(70));
    CHECK_FALSE(o.contains(2));
    CHECK(o.max_orbital() == 70);
    CHECK(o.count_below(3) == 1);
    CHECK(o.count_below(71) == 3);
    CHECK(o.indices() == std::vector<int>{1, 3, 70});
    CHECK(o.to_string() == "[1 3 70]");
    CHECK(Occupation{}.to_string() == "[]");
    CHECK(Occupation::range(2, 4) == Occupation::from_indices({2, 3, 4}));
  }

  TEST_CASE("rejects unordered or non-positive indices") {
    CHECK_THROWS_AS(Occupation::from_indices({2, 1}), DomainError);
    CHECK_THROWS_AS(Occupation::from_indices({1, 1}), DomainError);
    CHECK_THROWS_AS(Occupation::from_indices({0, 1}), DomainError);
  }

  TEST_CASE("set algebra across the word boundary") {
    auto a = Occupation::from_indices({1, 64, 65, 130});
    const auto b = Occupation::from_indices({64, 131});
    CHECK((a & b) == Occupation::from_indices({64}));
    CHECK((a | b).count() == 5);
    CHECK((a - b) == Occupation::from_indices({1, 65, 130}));
    CHECK_FALSE(a.disjoint(b));
    CHECK(Occupation::from_indices({65}).subset_of(a));
    a.erase(130);
    a.erase(65);
    CHECK(a == Occupation::from_indices({1, 64}));
  }

  TEST_CASE("ordering follows the integer encoding") {
    CHECK(Occupation::from_indices({1, 2}) < Occupation::from_indices({3}));
    CHECK(Occupation::from_indices({3}) < Occupation::from_indices({1, 3}));
    CHECK(Occupation::from_indices({70}) > Occupation::from_indices({1, 2, 3}));
  }

  TEST_CASE("hash distinguishes wide occupations") {
    std::unordered_set<Occupation> set;
    for (int i = 1; i <= 150; ++i) set.insert(Occupation::from_indices({i}));
    CHECK(set.size() == 150);
  }

  TEST_CASE("wedge_sign is the parity of the concatenation") {
    CHECK(wedge_sign(Occupation::from_indices({1}), Occupation::from_indices({2})) == 1);
    CHECK(wedge_sign(Occupation::from_indices({2}), Occupation::from_indices({1})) == -1);
    CHECK(wedge_sign(Occupation::from_indices({1}), Occupation::from_indices({1})) == 0);
    CHECK(wedge_sign(Occupation::from_indices({2, 4}), Occupation::from_indices({1, 3})) == -1);
    CHECK(wedge_sign(Occupation::from_indices({3, 4}), Occupation::from_indices({1, 2})) == 1);
    CHECK(wedge_sign(Occupation::from_indices({100}), Occupation::from_indices({1, 70})) == 1);
    CHECK(wedge_sign(Occupation::from_indices({100}), Occupation::from_indices({1})) == -1);
  }
}

TEST_SUITE("state_vector") {
  TEST_CASE("construction and shape checks") {
    StateVector v(4, 2);
    v.add(Occupation::from_indices({1, 2}), 2.0);
    v.add(Occupation::from_indices({1, 2}), Complex(0, 1));
    CHECK(v.coefficient(Occupation::from_indices({1, 2})) == Complex(2, 1));
    CHECK(v.coefficient(Occupation::from_indices({3, 4})) == Complex{});
    CHECK_THROWS_AS(v.add(Occupation::from_indices({1}), 1.0), ShapeError);
    CHECK_THROWS_AS(v.add(Occupation::from_indices({1, 5}), 1.0), ShapeError);
    CHECK_THROWS_AS(StateVector(0, 0), std::exception);
    CHECK(StateVector::vacuum(3).coefficient(Occupation{}) == Complex(1));
  }

  TEST_CASE("arithmetic prunes cancelled terms") {
    const auto a = StateVector::determinant(4, {1, 2}) + StateVector::determinant(4, {3, 4});
    const auto b = a - StateVector::determinant(4, {3, 4});
    CHECK(b.size() == 1);
    CHECK(b == StateVector::determinant(4, {1, 2}));
    CHECK((a - a).is_zero());
    CHECK(std::abs(a.norm() - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(a.normalized().norm() - 1.0) < 1e-15);
    CHECK_THROWS_AS(StateVector(4, 2).normalized(), DomainError);
    CHECK_THROWS_AS(a + StateVector::determinant(4, {1}), ShapeError);
    CHECK_THROWS_AS(a + StateVector::determinant(5, {1, 2}), ShapeError);
  }

  TEST_CASE("tiny coefficients are dropped by operations") {
    auto a = StateVector::determinant(3, {1}, 1.0) + StateVector::determinant(3, {2}, 1e-16);
    CHECK(a.size() == 1);
    CHECK(max_abs_difference(a, StateVector::determinant(3, {1})) == 0.0);
  }
}

TEST_SUITE("combinatorics") {
  TEST_CASE("binomial") {
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS(binomial(200, 100));
  }

  TEST_CASE("combinations are lexicographic") {
    const auto c = combinations(4, 2);
    REQUIRE(c.size() == 6);
    CHECK(c.front() == std::vector<int>{0, 1});
    CHECK(c[1] == std::vector<int>{0, 2});
    CHECK(c.back() == std::vector<int>{2, 3});
    CHECK(combinations(3, 0).size() == 1);
    CHECK(combinations(2, 3).empty());
  }

  TEST_CASE("compositions respect caps in lexicographic order") {
    const std::vector<int> caps{2, 1, 2};
    std::vector<std::vector<int>> seen;
    for_each_composition(caps, 3, [&](std::span<const int> c) { seen.emplace_back(c.begin(), c.end()); });
    CHECK(seen.front() == std::vector<int>{0, 1, 2});
    CHECK(seen.back() == std::vector<int>{2, 1, 0});
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    std::uint64_t weighted = 0;
    for (const auto& c : seen) weighted += binomial(2, c[0]) * binomial(1, c[1]) * binomial(2, c[2]);
    CHECK(weighted == binomial(5, 3));
  }
}
