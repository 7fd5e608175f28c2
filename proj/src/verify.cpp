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

#include "hhsq/verify.hpp"

namespace hhsq {

WordCheck check_word(const CyclicWord& w, const GroundRing& ring) {
  WordCheck out;
  out.word = w;
  out.kind = classify(w);
  const int m = w.length();

  SummandComplex slice = build_summand_complex(w, ring);
  std::map<int, ModuleDescriptor> expected = predict(w, ring);

  out.modules_match = true;
  for (int q = 0; q <= m + 1; ++q)
    if (!(homology_at(slice.complex, q).module == predicted_at(expected, q)))
      out.modules_match = false;

  const int low_degree = m == 0 ? 0 : m - 1;
  {
    Chain low = generator_low(w, ring);
    Vec coords = summand_coordinates(slice, low);
    HomologyDescriptor h = homology_at(slice.complex, low_degree);
    out.low_witness_ok = is_cycle(slice.complex, low_degree, coords) &&
                         class_generates(slice.complex, h, coords);
  }

  if (m == 0) {
    out.high_witness_ok = true;
    out.comparison_ok = true;
    return out;
  }

  RingElement a = ring.one();
  if (classify(w) == HomologyCase::TorsionPair) {
    CyclicSummand tors = two_torsion(ring);
    a = tors.generator ? *tors.generator : ring.zero();
  }
  Chain high = generator_high(w, ring, a);
  Vec coords = summand_coordinates(slice, high);
  HomologyDescriptor h = homology_at(slice.complex, m);
  out.high_witness_ok = is_cycle(slice.complex, m, coords) &&
                        class_generates(slice.complex, h, coords);

  out.comparison_ok = compare_with_reference(w, ring).ok();
  return out;
}

SweepResult sweep_words(int r, int max_m, const GroundRing& ring,
                        ExecutionMode mode) {
  if (r < 1 || max_m < 0)
    throw std::invalid_argument("sweep_words: bad parameters");
  std::vector<CyclicWord> words;
  for (int m = 0; m <= max_m; ++m) {
    std::vector<CyclicWord> batch = enumerate_necklaces(r, m);
    words.insert(words.end(), batch.begin(), batch.end());
  }
  SweepResult out;
  out.r = r;
  out.max_m = max_m;
  out.checks.resize(words.size());
  parallel_for(static_cast<int>(words.size()), mode,
               [&](int i) { out.checks[i] = check_word(words[i], ring); });
  for (const WordCheck& c : out.checks)
    if (!c.ok()) ++out.failures;
  return out;
}

std::vector<SymbolReport> sweep_symbols(int r, const GroundRing& ring) {
  if (r < 1) throw std::invalid_argument("sweep_symbols: need r >= 1");
  std::vector<SymbolReport> out;
  out.reserve(r);
  for (int q = 1; q <= r; ++q) out.push_back(verify_symbol_class(q, r, ring));
  return out;
}

std::vector<OracleCheck> oracle_compare(int r, const GroundRing& ring,
                                        int max_q, long long budget,
                                        ExecutionMode mode) {
  FullComplex full = build_full_complex(r, ring, max_q, budget, mode);
  std::vector<OracleCheck> out(max_q + 1);
  for (int q = 0; q <= max_q; ++q) {
    OracleCheck& c = out[q];
    c.degree = q;
    c.from_full = homology_at(full.complex, q).module;
    c.from_slices = aggregate_homology(r, ring, q, mode).module;
    c.match = c.from_full == c.from_slices;
  }
  return out;
}

}  // namespace hhsq
