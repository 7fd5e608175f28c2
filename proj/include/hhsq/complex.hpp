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

#include <optional>
#include <string>
#include <vector>

#include "hhsq/matrix.hpp"
#include "hhsq/normal_forms.hpp"

namespace hhsq {

// Bounded complex of finitely generated free modules with a chosen ordered
// basis per degree. diffs[q] maps degree q to degree q-1; diffs[0] has zero
// rows. Shape and d(d(x)) == 0 are checked at construction.
class ChainComplex {
 public:
  ChainComplex(GroundRing ring, std::vector<std::vector<std::string>> labels,
               std::vector<Matrix> diffs);

  const GroundRing& ring() const { return ring_; }
  int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
  int dim(int q) const;
  const std::vector<std::string>& labels(int q) const;
  // Differential leaving degree q; valid for 0 <= q <= top_degree().
  const Matrix& diff(int q) const;

 private:
  GroundRing ring_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<Matrix> diffs_;
};

// Homology at one degree with witness cycles: one generator per free summand
// and one per torsion factor (aligned with module.torsion). Generators are
// verified cycles and non-boundaries.
struct HomologyDescriptor {
  int degree = 0;
  ModuleDescriptor module;
  std::vector<Vec> free_generators;
  std::vector<Vec> torsion_generators;
};

// Kernel-mod-image at degree q; requires the differential at q+1, hence
// q < top_degree(). Fields and Z run through the Smith machinery, residue
// rings through Howell kernels with a Smith pass on the relation matrix.
HomologyDescriptor homology_at(const ChainComplex& c, int q);

bool is_cycle(const ChainComplex& c, int q, const Vec& z);
bool is_boundary(const ChainComplex& c, int q, const Vec& z);
// Same homology class, i.e. the difference is a boundary. Inputs must be
// cycles.
bool classes_equal(const ChainComplex& c, int q, const Vec& z1, const Vec& z2);

// Coordinates of the class of z with respect to the stored generators
// (free part first), defined modulo the relation lattice.
struct ClassCoordinates {
  Vec free_coords;
  Vec torsion_coords;
};
std::optional<ClassCoordinates> class_coordinates(const ChainComplex& c,
                                                  const HomologyDescriptor& h,
                                                  const Vec& z);

// For cyclic homology modules (rank one free, or a single torsion factor, or
// zero): does the class of z generate the whole module?
bool class_generates(const ChainComplex& c, const HomologyDescriptor& h,
                     const Vec& z);

// The same complex with every entry pushed through ring2.from_int of its
// integer lift; only meaningful from Z to a modular ring.
ChainComplex change_ring(const ChainComplex& c, const GroundRing& ring2);

// Canonical form of a finite direct sum of descriptors over one ring.
ModuleDescriptor combine_descriptors(const GroundRing& ring,
                                     const std::vector<ModuleDescriptor>& ds);

}  // namespace hhsq
