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

#pragma once

#include <string>
#include <vector>

namespace hhsq {

// Word in the generators, stored as 1-based generator indices.
using Word = std::vector<int>;

// Rotation orbit of a word: the lexicographically least rotation together
// with the orbit size (the least u > 0 with rotate(rep, u) == rep).
struct CyclicWord {
  Word representative;
  int period = 1;

  int length() const { return static_cast<int>(representative.size()); }
  bool operator==(const CyclicWord&) const = default;
  // Ordered by length, then representative; gives a deterministic global
  // order on necklaces of mixed lengths.
  bool operator<(const CyclicWord& o) const {
    if (representative.size() != o.representative.size())
      return representative.size() < o.representative.size();
    return representative < o.representative;
  }
};

// Word with letters moved left by `shift` slots (cyclically).
Word rotate_left(const Word& w, int shift);

// Validates letters against the generator count r; throws std::invalid_argument.
Word make_word(std::vector<int> letters, int r);

// Canonical representative of the rotation orbit of w. Letters must be >= 1.
CyclicWord canonicalize(const Word& w);

// The period-many distinct rotations, starting from the canonical
// representative, each shifted left by one more slot.
std::vector<Word> rotations(const CyclicWord& w);

// All necklaces of length m over r letters, sorted by representative.
// m == 0 yields exactly the empty necklace.
std::vector<CyclicWord> enumerate_necklaces(int r, int m);

// Necklace count by the classic divisor sum; used as a cross-check against
// enumeration.
long long necklace_count(int r, int m);

// "1,2,1" for (x1 x2 x1); "" for the empty word.
std::string word_str(const Word& w);
// Parses the CLI word syntax; throws std::invalid_argument with position info.
Word parse_word(const std::string& text, int r);

}  // namespace hhsq
