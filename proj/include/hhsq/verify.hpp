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
#include "hhsq/symbols.hpp"

namespace hhsq {

// Full conformance audit of one necklace: engine homology against the
// predicted modules in every degree through m + 1, witness generators
// actually generating, and the rotation-model comparison.
struct WordCheck {
  CyclicWord word;
  HomologyCase kind = HomologyCase::EmptyWord;
  bool modules_match = false;
  bool low_witness_ok = false;
  bool high_witness_ok = false;
  bool comparison_ok = false;
  bool ok() const {
    return modules_match && low_witness_ok && high_witness_ok &&
           comparison_ok;
  }
};
WordCheck check_word(const CyclicWord& w, const GroundRing& ring);

// check_word over every necklace with length <= max_m on r letters.
struct SweepResult {
  int r = 0;
  int max_m = 0;
  std::vector<WordCheck> checks;  // necklace order
  long long failures = 0;
  bool ok() const { return failures == 0; }
};
SweepResult sweep_words(int r, int max_m, const GroundRing& ring,
                        ExecutionMode mode = ExecutionMode::Serial);

// Symbol nontriviality for every q from 1 to r.
std::vector<SymbolReport> sweep_symbols(int r, const GroundRing& ring);

// Slice-assembled homology against the raw bar complex, degree by degree.
struct OracleCheck {
  int degree = 0;
  ModuleDescriptor from_full;
  ModuleDescriptor from_slices;
  bool match = false;
};
std::vector<OracleCheck> oracle_compare(int r, const GroundRing& ring,
                                        int max_q, long long budget = 20000,
                                        ExecutionMode mode = ExecutionMode::Serial);

}  // namespace hhsq
