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

#include <map>

#include "hhsq/complex.hpp"
#include "hhsq/summand.hpp"

namespace hhsq {

// How a necklace's slice behaves, decided by length m and period l.
//   EmptyWord:   m = 0; one free generator in degree 0.
//   FreePair:    m odd or l even; one free generator in degrees m-1 and m.
//   TorsionPair: m even (>= 2) and l odd; ring/2*ring in degree m-1 and the
//                2-torsion of the ring in degree m.
enum class HomologyCase { EmptyWord = 1, FreePair = 2, TorsionPair = 3 };

HomologyCase classify(const CyclicWord& w);
int case_number(HomologyCase c);

// Predicted slice homology; degrees with zero module are omitted.
std::map<int, ModuleDescriptor> predict(const CyclicWord& w,
                                        const GroundRing& ring);
ModuleDescriptor predicted_at(const std::map<int, ModuleDescriptor>& p, int q);

// Witness cycle in the lower populated degree (degree 0 for the empty word,
// m-1 otherwise): the canonical rotation itself, coefficient one.
Chain generator_low(const CyclicWord& w, const GroundRing& ring);

// Witness cycle in degree m: the signed sum of unit-prefixed rotations,
// scaled by a. For TorsionPair words a must satisfy 2a = 0 (so over Z only
// a = 0, matching the vanishing module); EmptyWord has no such degree.
Chain generator_high(const CyclicWord& w, const GroundRing& ring,
                     const RingElement& a);

// Rank-l model in the same two degrees with differential 1 - shift
// (FreePair) or 1 + shift (TorsionPair) on the rotation classes.
struct ReferenceComplex {
  CyclicWord word;
  bool plus = false;
  ChainComplex complex;
};
ReferenceComplex reference_complex(const CyclicWord& w, const GroundRing& ring);

// Signed basis bijection from the reference model into the slice, with the
// machine-checked evidence that it is an isomorphism of complexes and that
// the model's homology matches the prediction.
struct ComparisonReport {
  CyclicWord word;
  Matrix low, high;  // reference basis -> slice coordinates per degree
  bool squares_commute = false;
  bool bijective_on_bases = false;
  bool reference_homology_matches = false;
  bool ok() const {
    return squares_commute && bijective_on_bases && reference_homology_matches;
  }
};
ComparisonReport compare_with_reference(const CyclicWord& w,
                                        const GroundRing& ring);

// The length-l circle sequence: 2-torsion of the ring, into the free module
// on the rotation classes via the norm, then 1 + shift, then the mod-2 sum,
// onto ring/2*ring. Checked position by position as matrix identities, plus
// the fact that the sum-after-norm composite is multiplication by l.
struct ExactnessReport {
  int ell = 1;
  bool injects = false;
  bool exact_at_first = false;
  bool exact_at_second = false;
  bool surjects = false;
  bool composite_is_ell = false;
  bool ok() const {
    return injects && exact_at_first && exact_at_second && surjects &&
           composite_is_ell;
  }
};
ExactnessReport verify_exact_sequence(int ell, const GroundRing& ring);

}  // namespace hhsq
