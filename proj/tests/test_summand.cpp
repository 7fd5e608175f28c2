/*
 * Copyright 2026 the hhsq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "checks.hpp"
#include "hhsq/closed_form.hpp"
#include "hhsq/summand.hpp"

using namespace hhsq;

namespace {
const GroundRing kZ = GroundRing::integers();
const GroundRing kQ = GroundRing::rationals();

CyclicWord word_of(std::vector<int> letters, int r) {
  return canonicalize(make_word(std::move(letters), r));
}
}  // namespace

TEST_CASE("slice bases sit in two adjacent degrees") {
  CyclicWord w = word_of({1, 2}, 2);
  CHECK(summand_basis(w, 0).empty());
  auto low = summand_basis(w, 1);
  REQUIRE(low.size() == 2);
  CHECK(low[0] == make_simplex({1, 2}, 2));
  CHECK(low[1] == make_simplex({2, 1}, 2));
  auto high = summand_basis(w, 2);
  REQUIRE(high.size() == 2);
  CHECK(high[0] == make_simplex({0, 1, 2}, 2));
  CHECK(high[1] == make_simplex({0, 2, 1}, 2));
  CHECK(summand_basis(w, 3).empty());

  CyclicWord repeated = word_of({1, 1, 1, 1}, 1);
  CHECK(repeated.period == 1);
  CHECK(summand_basis(repeated, 3).size() == 1);
  CHECK(summand_basis(repeated, 4).size() == 1);

  CyclicWord empty = word_of({}, 1);
  auto unit = summand_basis(empty, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == make_simplex({0}, 1));
  CHECK(summand_basis(empty, 1).empty());
}

TEST_CASE("slice differentials against hand calculations") {
  SummandComplex two = build_summand_complex(word_of({1, 2}, 2), kZ);
  CHECK(two.complex.diff(1).is_zero());
  CHECK(two.complex.diff(2) == Matrix::from_rows(kZ, {{1, 1}, {1, 1}}));
  CHECK(two.complex.dim(3) == 0);

  SummandComplex square = build_summand_complex(word_of({1, 1}, 1), kZ);
  CHECK(square.complex.diff(2) == Matrix::from_rows(kZ, {{2}}));

  // Odd length: the wrapped term picks up the sign of the rotation.
  SummandComplex three = build_summand_complex(word_of({1, 2, 3}, 3), kZ);
  CHECK(three.complex.diff(3) ==
        Matrix::from_rows(kZ, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
}

TEST_CASE("top degree must leave room for the next differential") {
  CyclicWord w = word_of({1, 2}, 2);
  CHECK_THROWS_AS(build_summand_complex(w, kZ, 2), std::invalid_argument);
  SummandComplex tight = build_summand_complex(w, kZ, 3);
  CHECK(tight.complex.top_degree() == 3);
  CHECK(homology_at(tight.complex, 2).module == ModuleDescriptor(1, {}));
}

TEST_CASE("slice homology matches the case predictions") {
  std::vector<std::vector<int>> words{{},        {1},       {1, 1},
                                      {1, 2},    {1, 1, 1}, {1, 2, 3},
                                      {1, 1, 2}, {1, 2, 1, 2}, {1, 1, 1, 1},
                                      {1, 1, 2, 2}, {1, 2, 3, 4}};
  std::vector<GroundRing> rings{kZ,
                                kQ,
                                GroundRing::prime_field(2),
                                GroundRing::prime_field(3),
                                GroundRing::prime_field(5),
                                GroundRing::residue(4),
                                GroundRing::residue(6)};
  for (const auto& letters : words) {
    int r = 1;
    for (int a : letters) r = std::max(r, a);
    CyclicWord w = word_of(letters, r);
    for (const auto& ring : rings) {
      SummandComplex sc = build_summand_complex(w, ring);
      auto expected = predict(w, ring);
      for (int q = 0; q < sc.complex.top_degree(); ++q) {
        CHECK(homology_at(sc.complex, q).module == predicted_at(expected, q));
      }
      for (const auto& [q, module] : expected) {
        CHECK_FALSE(module.is_zero());
        CHECK(homology_at(sc.complex, q).module == module);
      }
    }
  }
}

TEST_CASE("raw slice carries the same homology as the normalized one") {
  for (const auto& letters :
       std::vector<std::vector<int>>{{1}, {1, 1}, {1, 2}, {1, 1, 1}}) {
    int r = 2;
    CyclicWord w = word_of(letters, r);
    for (const auto& ring : {kZ, GroundRing::prime_field(2), kQ}) {
      SummandComplex norm = build_summand_complex(w, ring);
      SummandComplex raw =
          build_raw_summand_complex(w, r, ring, w.length() + 1);
      for (int q = 0; q <= w.length(); ++q) {
        CHECK(homology_at(raw.complex, q).module ==
              homology_at(norm.complex, q).module);
      }
    }
  }
}

TEST_CASE("chains split along necklaces and reassemble") {
  testing::Rng rng(808017u);
  for (int trial = 0; trial < 40; ++trial) {
    int degree = testing::rand_int(rng, 0, 3);
    Chain c = testing::rand_chain(rng, kZ, degree, 2, 4);
    auto parts = decompose_chain(c);
    Chain sum = zero_chain(kZ, degree);
    for (const auto& [w, part] : parts) {
      CHECK_FALSE(part.is_zero());
      CHECK(component_at(c, w) == part);
      for (const auto& [s, coef] : part.terms()) CHECK(summand_of(s) == w);
      sum = sum.plus(part);
    }
    CHECK(sum == c);
    CHECK(component_at(c, word_of({1, 1, 2, 2, 1}, 2)).is_zero());
  }
}

TEST_CASE("slice coordinates round-trip") {
  CyclicWord w = word_of({1, 2}, 2);
  SummandComplex sc = build_summand_complex(w, kZ);
  Chain c = zero_chain(kZ, 2);
  c.add_term(make_simplex({0, 1, 2}, 2), kZ.from_int(3));
  c.add_term(make_simplex({0, 2, 1}, 2), kZ.from_int(-1));
  Vec coords = summand_coordinates(sc, c);
  CHECK(coords == Vec{kZ.from_int(3), kZ.from_int(-1)});
  CHECK(summand_chain(sc, 2, coords) == c);

  Chain foreign = zero_chain(kZ, 2);
  foreign.add_term(make_simplex({0, 1, 1}, 2), kZ.one());
  CHECK_THROWS_AS(summand_coordinates(sc, foreign), std::invalid_argument);
}

TEST_CASE("full complex over one generator") {
  FullComplex fc = build_full_complex(1, kQ, 4);
  // Dimensions: all tensors in 1 and x, so 2^(q + 1) per degree.
  CHECK(fc.complex.dim(0) == 2);
  CHECK(fc.complex.dim(3) == 16);
  std::vector<int> dims{2, 1, 1, 1};
  for (int q = 0; q <= 3; ++q) {
    CHECK(homology_at(fc.complex, q).module ==
          ModuleDescriptor(dims[static_cast<std::size_t>(q)], {}));
  }

  FullComplex fz = build_full_complex(1, kZ, 3);
  CHECK(homology_at(fz.complex, 0).module == ModuleDescriptor(2, {}));
  CHECK(homology_at(fz.complex, 1).module == ModuleDescriptor(1, {2}));
  CHECK(homology_at(fz.complex, 2).module == ModuleDescriptor(1, {}));
  CHECK(homology_at(fz.complex, 3).module == ModuleDescriptor(1, {2}));
}

TEST_CASE("full-complex coordinates agree with lexicographic layout") {
  FullComplex fc = build_full_complex(2, kZ, 2);
  Chain c = zero_chain(kZ, 1);
  c.add_term(make_simplex({0, 1}, 2), kZ.one());
  c.add_term(make_simplex({2, 2}, 2), kZ.from_int(5));
  Vec coords = full_coordinates(fc, c);
  REQUIRE(coords.size() == 9);
  CHECK(coords[1] == kZ.one());       // (0,1) -> 0*3 + 1
  CHECK(coords[8] == kZ.from_int(5)); // (2,2) -> 2*3 + 2
  for (std::size_t i : {0u, 2u, 3u, 4u, 5u, 6u, 7u})
    CHECK(coords[i] == kZ.zero());
}

TEST_CASE("budget guard reports the offending degree") {
  try {
    build_full_complex(2, kZ, 6, 50);
    FAIL("expected the budget guard to fire");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget == 50);
    CHECK(e.dimension > 50);
    CHECK(e.degree <= 7);
    CHECK(e.degree >= 1);
  }
}

TEST_CASE("aggregated slice homology equals the brute-force answer") {
  for (const auto& ring : {kZ, kQ}) {
    FullComplex fc = build_full_complex(1, ring, 3);
    for (int q = 0; q <= 2; ++q) {
      AggregateHomology agg = aggregate_homology(1, ring, q);
      CHECK(agg.module == homology_at(fc.complex, q).module);
      for (const auto& part : agg.parts)
        CHECK_FALSE(part.homology.module.is_zero());
    }
  }
  // Two generators, degree two, over a field and the integers.
  AggregateHomology f2 = aggregate_homology(2, GroundRing::prime_field(2), 2);
  CHECK(f2.module == ModuleDescriptor(7, {}));
  AggregateHomology q2 = aggregate_homology(2, kQ, 2);
  CHECK(q2.module == ModuleDescriptor(5, {}));
  AggregateHomology z1 = aggregate_homology(2, kZ, 1);
  CHECK(z1.module == ModuleDescriptor(3, {2, 2}));
}

TEST_CASE("serial and parallel assembly agree") {
  FullComplex serial =
      build_full_complex(2, kZ, 3, 20000, ExecutionMode::Serial);
  FullComplex parallel =
      build_full_complex(2, kZ, 3, 20000, ExecutionMode::OpenMp);
  for (int q = 0; q <= 4; ++q)
    CHECK(serial.complex.diff(q) == parallel.complex.diff(q));
  AggregateHomology a = aggregate_homology(2, kZ, 2, ExecutionMode::Serial);
  AggregateHomology b = aggregate_homology(2, kZ, 2, ExecutionMode::OpenMp);
  CHECK(a.module == b.module);
  REQUIRE(a.parts.size() == b.parts.size());
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    CHECK(a.parts[i].word == b.parts[i].word);
}
