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

#include "hhsq/symbols.hpp"

#include <algorithm>
#include <numeric>

namespace hhsq {

Chain dlog_cycle(int i, int r, const GroundRing& ring) {
  if (i < 1 || i > r)
    throw std::invalid_argument("dlog_cycle: generator index out of range");
  Chain out = zero_chain(ring, 1);
  out.add_term(Simplex{{0, i}}, ring.one());
  out.add_term(Simplex{{i, i}}, ring.neg(ring.one()));
  return out;
}

Chain shuffle(const Chain& a, const Chain& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("shuffle: ring mismatch");
  const GroundRing& ring = a.ring();
  const int p = a.degree();
  const int q = b.degree();
  Chain out = zero_chain(ring, p + q);
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      int head = mul_factor(s.factors[0], t.factors[0]);
      if (head < 0) continue;
      RingElement base = ring.mul(cs, ct);

      // Ascending positions (0-based among the p + q letter slots) taken by
      // the letters of s; the letters of t fill the complement.
      std::vector<int> pos(p);
      std::iota(pos.begin(), pos.end(), 0);
      while (true) {
        long long inversions = 0;
        std::vector<int> factors(p + q + 1, -1);
        factors[0] = head;
        for (int i = 0; i < p; ++i) {
          factors[pos[i] + 1] = s.factors[i + 1];
          inversions += pos[i] - i;
        }
        int next_t = 1;
        for (int slot = 1; slot <= p + q; ++slot)
          if (factors[slot] < 0) factors[slot] = t.factors[next_t++];
        RingElement coeff =
            inversions % 2 == 0 ? base : ring.neg(base);
        out.add_term(Simplex{std::move(factors)}, coeff);

        if (p == 0) break;
        int i = p - 1;
        while (i >= 0 && pos[i] == q + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int k = i + 1; k < p; ++k) pos[k] = pos[k - 1] + 1;
      }
    }
  }
  return out;
}

Chain symbol_cycle(int q, int r, const GroundRing& ring) {
  if (q < 1 || q > r)
    throw std::invalid_argument("symbol_cycle: need 1 <= q <= r");
  Chain out = dlog_cycle(1, r, ring);
  for (int i = 2; i <= q; ++i) out = shuffle(out, dlog_cycle(i, r, ring));
  return out;
}

Chain projected_symbol_formula(int q, const GroundRing& ring) {
  if (q < 1)
    throw std::invalid_argument("projected_symbol_formula: need q >= 1");
  Chain out = zero_chain(ring, q);
  std::vector<int> rot(q);
  std::iota(rot.begin(), rot.end(), 1);
  RingElement sign = ring.one();
  RingElement step =
      (q - 1) % 2 == 0 ? ring.one() : ring.neg(ring.one());
  for (int u = 0; u < q; ++u) {
    std::vector<int> factors;
    factors.reserve(q + 1);
    factors.push_back(0);
    factors.insert(factors.end(), rot.begin(), rot.end());
    out.add_term(Simplex{std::move(factors)}, sign);
    sign = ring.mul(sign, step);
    std::rotate(rot.begin(), rot.end() - 1, rot.end());
  }
  return out;
}

Chain project_symbol(int q, int r, const GroundRing& ring) {
  if (q < 1 || q > r)
    throw std::invalid_argument("project_symbol: need 1 <= q <= r");
  std::vector<int> letters(q);
  std::iota(letters.begin(), letters.end(), 1);
  return component_at(symbol_cycle(q, r, ring), canonicalize(letters));
}

SymbolReport verify_symbol_class(int q, int r, const GroundRing& ring) {
  if (q < 1 || q > r)
    throw std::invalid_argument("verify_symbol_class: need 1 <= q <= r");
  std::vector<int> letters(q);
  std::iota(letters.begin(), letters.end(), 1);
  CyclicWord w = canonicalize(letters);

  SymbolReport report;
  report.q = q;
  report.word = w;

  Chain sym = symbol_cycle(q, r, ring);
  report.symbol_is_cycle = boundary(sym).is_zero();

  Chain proj = component_at(sym, w);
  report.matches_formula = proj == projected_symbol_formula(q, ring);

  SummandComplex slice = build_summand_complex(w, ring);
  Vec coords = summand_coordinates(slice, proj);
  report.cycle_in_slice = is_cycle(slice.complex, q, coords);

  Chain witness = generator_high(w, ring, ring.one());
  Vec wcoords = summand_coordinates(slice, witness);
  report.matches_generator_class =
      classes_equal(slice.complex, q, coords, wcoords);

  report.nontrivial = !is_boundary(slice.complex, q, coords);
  HomologyDescriptor h = homology_at(slice.complex, q);
  report.generates = class_generates(slice.complex, h, coords);
  report.module = h.module;
  return report;
}

}  // namespace hhsq
