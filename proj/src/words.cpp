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

#include "hhsq/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hhsq {

Word rotate_left(const Word& w, int shift) {
  const int m = static_cast<int>(w.size());
  if (m == 0) return w;
  shift = ((shift % m) + m) % m;
  Word out(w.begin() + shift, w.end());
  out.insert(out.end(), w.begin(), w.begin() + shift);
  return out;
}

Word make_word(std::vector<int> letters, int r) {
  if (r < 1) throw std::invalid_argument("make_word: r must be >= 1");
  for (int a : letters)
    if (a < 1 || a > r)
      throw std::invalid_argument("make_word: letter out of range");
  return letters;
}

CyclicWord canonicalize(const Word& w) {
  for (int a : w)
    if (a < 1) throw std::invalid_argument("canonicalize: letter out of range");
  const int m = static_cast<int>(w.size());
  if (m == 0) return CyclicWord{{}, 1};
  Word best = w;
  for (int u = 1; u < m; ++u) best = std::min(best, rotate_left(w, u));
  int period = 1;
  while (rotate_left(best, period) != best) ++period;
  return CyclicWord{best, period};
}

std::vector<Word> rotations(const CyclicWord& w) {
  if (w.length() == 0)
    throw std::invalid_argument("rotations: empty word has no rotations");
  std::vector<Word> out;
  out.reserve(w.period);
  for (int u = 0; u < w.period; ++u)
    out.push_back(rotate_left(w.representative, u));
  return out;
}

std::vector<CyclicWord> enumerate_necklaces(int r, int m) {
  if (r < 1 || m < 0)
    throw std::invalid_argument("enumerate_necklaces: bad arguments");
  if (m == 0) return {CyclicWord{{}, 1}};
  std::vector<CyclicWord> out;
  Word w(m, 1);
  while (true) {
    CyclicWord c = canonicalize(w);
    if (c.representative == w) out.push_back(c);
    int i = m - 1;
    while (i >= 0 && w[i] == r) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

long long necklace_count(int r, int m) {
  if (m == 0) return 1;
  auto phi = [](int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        result -= result / p;
        while (d % p == 0) d /= p;
      }
    }
    if (d > 1) result -= result / d;
    return result;
  };
  long long total = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    long long power = 1;
    for (int i = 0; i < m / d; ++i) power *= r;
    total += phi(d) * power;
  }
  return total / m;
}

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text, int r) {
  Word letters;
  if (text.empty()) return letters;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("word string '" + text +
                                  "': expected digit at position " +
                                  std::to_string(pos));
    std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000)
        throw std::invalid_argument("word string '" + text +
                                    "': index too large at position " +
                                    std::to_string(start));
      ++pos;
    }
    if (pos - start > 1 && text[start] == '0')
      throw std::invalid_argument("word string '" + text +
                                  "': leading zero at position " +
                                  std::to_string(start));
    if (value < 1 || value > r)
      throw std::invalid_argument("word string '" + text +
                                  "': index out of range [1," +
                                  std::to_string(r) + "] at position " +
                                  std::to_string(start));
    letters.push_back(static_cast<int>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw std::invalid_argument("word string '" + text +
                                  "': expected ',' at position " +
                                  std::to_string(pos));
    ++pos;
  }
  return letters;
}

}  // namespace hhsq
