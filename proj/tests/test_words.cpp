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

#include <set>

#include "hhsq/words.hpp"

using namespace hhsq;

TEST_CASE("canonical rotation orbits") {
  CyclicWord w = canonicalize({2, 1, 1});
  CHECK(w.representative == Word{1, 1, 2});
  CHECK(w.period == 3);

  CyclicWord alt = canonicalize({1, 2, 1, 2});
  CHECK(alt.representative == Word{1, 2, 1, 2});
  CHECK(alt.period == 2);

  CyclicWord ones = canonicalize({1, 1, 1});
  CHECK(ones.period == 1);

  CyclicWord empty = canonicalize({});
  CHECK(empty.length() == 0);
  CHECK(empty.period == 1);

  CHECK(canonicalize({3, 1, 2}) == canonicalize({1, 2, 3}));
  CHECK(canonicalize({3, 1, 2}) == canonicalize({2, 3, 1}));
  CHECK_FALSE(canonicalize({1, 3, 2}) == canonicalize({1, 2, 3}));
}

TEST_CASE("rotation lists") {
  CyclicWord w = canonicalize({1, 1, 2});
  std::vector<Word> rots = rotations(w);
  REQUIRE(rots.size() == 3);
  CHECK(rots[0] == Word{1, 1, 2});
  CHECK(rots[1] == Word{1, 2, 1});
  CHECK(rots[2] == Word{2, 1, 1});

  CyclicWord rep = canonicalize({1, 2, 1, 2});
  std::vector<Word> reps = rotations(rep);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == Word{1, 2, 1, 2});
  CHECK(reps[1] == Word{2, 1, 2, 1});

  CHECK_THROWS_AS(rotations(canonicalize({})), std::invalid_argument);
}

TEST_CASE("rotate_left wraps") {
  Word w{1, 2, 3};
  CHECK(rotate_left(w, 0) == w);
  CHECK(rotate_left(w, 1) == Word{2, 3, 1});
  CHECK(rotate_left(w, 3) == w);
  CHECK(rotate_left(w, 4) == Word{2, 3, 1});
}

TEST_CASE("necklace enumeration matches the divisor-sum count") {
  for (int r = 1; r <= 4; ++r) {
    for (int m = 0; m <= 7; ++m) {
      std::vector<CyclicWord> all = enumerate_necklaces(r, m);
      CHECK(static_cast<long long>(all.size()) == necklace_count(r, m));
      std::set<Word> seen;
      for (const CyclicWord& w : all) {
        CHECK(static_cast<int>(w.representative.size()) == m);
        CHECK(canonicalize(w.representative) == w);
        seen.insert(w.representative);
      }
      CHECK(seen.size() == all.size());
      for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] < all[i]);
    }
  }
}

TEST_CASE("necklace counts, fixed values") {
  long long r2[] = {1, 2, 3, 4, 6, 8, 14};
  long long r3[] = {1, 3, 6, 11, 24, 51, 130};
  for (int m = 0; m <= 6; ++m) {
    CHECK(necklace_count(2, m) == r2[m]);
    CHECK(necklace_count(3, m) == r3[m]);
  }
  CHECK(enumerate_necklaces(3, 5).size() == 51);
  CHECK(enumerate_necklaces(1, 4).size() == 1);
  CHECK(enumerate_necklaces(2, 0).size() == 1);
  CHECK(enumerate_necklaces(2, 0)[0].length() == 0);
}

TEST_CASE("word parsing and printing") {
  CHECK(parse_word("1,2,1", 3) == Word{1, 2, 1});
  CHECK(parse_word("", 3).empty());
  CHECK(parse_word("3", 3) == Word{3});
  CHECK(word_str(Word{1, 2, 1}) == "1,2,1");
  CHECK(word_str(Word{}) == "");

  CHECK_THROWS_AS(parse_word("0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,2,", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("01", 3), std::invalid_argument);
}

TEST_CASE("make_word validates letters") {
  CHECK(make_word({1, 2}, 2) == Word{1, 2});
  CHECK_THROWS_AS(make_word({0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_word({3}, 2), std::invalid_argument);
}
