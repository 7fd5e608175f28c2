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

#include "hhsq/closed_form.hpp"
#include "hhsq/summand.hpp"

namespace hhsq {

// The degree-1 cycle 1 (x) x_i - x_i (x) x_i attached to one generator.
Chain dlog_cycle(int i, int r, const GroundRing& ring);

// Shuffle product: slot-0 entries multiply in the algebra, the letter slots
// interleave in all order-preserving ways with the usual inversion sign.
Chain shuffle(const Chain& a, const Chain& b);

// Left-folded shuffle product of the cycles for x_1, ..., x_q.
Chain symbol_cycle(int q, int r, const GroundRing& ring);

// Signed sum of unit-prefixed right-rotations of x_1 ... x_q, the predicted
// component of the symbol at that necklace.
Chain projected_symbol_formula(int q, const GroundRing& ring);

// Component of the symbol cycle at the necklace of x_1 ... x_q.
Chain project_symbol(int q, int r, const GroundRing& ring);

// Everything the nontriviality claim needs, one flag per step: the symbol is
// a cycle, its projected component equals the closed formula, the component
// is a cycle in the slice, it lies in the class of the degree-m witness
// generator, that class is not a boundary, and it generates the slice
// homology there.
struct SymbolReport {
  int q = 0;
  CyclicWord word;
  bool symbol_is_cycle = false;
  bool matches_formula = false;
  bool cycle_in_slice = false;
  bool matches_generator_class = false;
  bool nontrivial = false;
  bool generates = false;
  ModuleDescriptor module;
  bool ok() const {
    return symbol_is_cycle && matches_formula && cycle_in_slice &&
           matches_generator_class && nontrivial && generates;
  }
};

SymbolReport verify_symbol_class(int q, int r, const GroundRing& ring);

}  // namespace hhsq
