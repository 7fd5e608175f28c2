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
#include <stdexcept>
#include <vector>

#include "hhsq/algebra.hpp"
#include "hhsq/complex.hpp"
#include "hhsq/parallel.hpp"

namespace hhsq {

// Raised before any oversized degree is materialized.
struct BudgetExceeded : std::runtime_error {
  int degree;
  long long dimension;
  long long budget;
  BudgetExceeded(int degree_, long long dimension_, long long budget_);
};

// One necklace's slice of the normalized complex: basis simplices per degree
// aligned with the chain complex columns. A word of length m >= 1 is
// concentrated in degree m - 1 (its rotations) and degree m (unit-prefixed
// rotations), each of rank the period; the empty word is the unit simplex in
// degree 0.
struct SummandComplex {
  CyclicWord word;
  std::vector<std::vector<Simplex>> bases;
  ChainComplex complex;
};

// Slice basis at one degree, rotations in canonical-first order.
std::vector<Simplex> summand_basis(const CyclicWord& w, int q);

// top_degree >= length + 1 required (homology through the top populated
// degree needs the next differential); -1 picks length + 2.
SummandComplex build_summand_complex(const CyclicWord& w,
                                     const GroundRing& ring,
                                     int top_degree = -1);

// Raw cyclic bar slice for one necklace: every tensor whose letters spell w,
// degenerate ones included. Cross-check target for the normalized slice.
SummandComplex build_raw_summand_complex(const CyclicWord& w, int r,
                                         const GroundRing& ring,
                                         int top_degree);

// The whole cyclic bar complex over r generators, degrees 0 through
// max_q + 1, basis all (r + 1)^(q + 1) tensors in lexicographic order.
struct FullComplex {
  int r;
  std::vector<std::vector<Simplex>> bases;
  ChainComplex complex;
};

FullComplex build_full_complex(int r, const GroundRing& ring, int max_q,
                               long long budget = 20000,
                               ExecutionMode mode = ExecutionMode::Serial);

// Coordinates of a chain in a slice basis at the chain's degree; a term
// outside the slice raises std::invalid_argument.
Vec summand_coordinates(const SummandComplex& sc, const Chain& c);
Chain summand_chain(const SummandComplex& sc, int q, const Vec& coords);
Vec full_coordinates(const FullComplex& fc, const Chain& c);

// Splits a chain along necklaces. Every structure map preserves the split,
// so this is a direct sum decomposition of the whole complex.
std::map<CyclicWord, Chain> decompose_chain(const Chain& c);
Chain component_at(const Chain& c, const CyclicWord& w);

// Homology in one degree assembled from the normalized slices: only words of
// length q and q + 1 can contribute there.
struct SummandContribution {
  CyclicWord word;
  HomologyDescriptor homology;  // coordinates relative to the slice basis
};
struct AggregateHomology {
  int degree = 0;
  ModuleDescriptor module;
  std::vector<SummandContribution> parts;  // nonzero contributors, word order
};

AggregateHomology aggregate_homology(int r, const GroundRing& ring, int q,
                                     ExecutionMode mode = ExecutionMode::Serial);

}  // namespace hhsq
