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

#include "hhsq/complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>

namespace hhsq {

namespace {

// Solvability of M x = v from a decomposition carrying U only: with
// U M V = S the system is solvable iff (U v)_i lies in (S_ii) for every i.
bool smith_solvable(const GroundRing& ring, const SmithDecomposition& snf,
                    const Vec& v) {
  Vec z = snf.U.apply(v);
  for (int i = 0; i < static_cast<int>(z.size()); ++i) {
    if (i < snf.rank) {
      if (!ring.divide(z[i], snf.S.get(i, i))) return false;
    } else if (!ring.is_zero(z[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

ChainComplex::ChainComplex(GroundRing ring,
                           std::vector<std::vector<std::string>> labels,
                           std::vector<Matrix> diffs)
    : ring_(std::move(ring)),
      labels_(std::move(labels)),
      diffs_(std::move(diffs)) {
  if (labels_.empty())
    throw std::invalid_argument("ChainComplex: no degrees given");
  if (diffs_.size() != labels_.size())
    throw std::invalid_argument(
        "ChainComplex: need one differential per degree");
  if (diffs_[0].rows() != 0 ||
      diffs_[0].cols() != static_cast<int>(labels_[0].size()))
    throw std::invalid_argument(
        "ChainComplex: differential at degree 0 must have zero rows");
  for (std::size_t q = 0; q < diffs_.size(); ++q) {
    if (!(diffs_[q].ring() == ring_))
      throw std::invalid_argument("ChainComplex: ring mismatch");
    if (q >= 1) {
      if (diffs_[q].rows() != static_cast<int>(labels_[q - 1].size()) ||
          diffs_[q].cols() != static_cast<int>(labels_[q].size()))
        throw std::invalid_argument("ChainComplex: differential shape");
      if (!diffs_[q - 1].mul(diffs_[q]).is_zero())
        throw std::invalid_argument(
            "ChainComplex: d(d(x)) is nonzero; not a complex");
    }
  }
}

int ChainComplex::dim(int q) const {
  if (q < 0 || q > top_degree()) return 0;
  return static_cast<int>(labels_[q].size());
}

const std::vector<std::string>& ChainComplex::labels(int q) const {
  if (q < 0 || q > top_degree())
    throw std::out_of_range("ChainComplex::labels: degree out of range");
  return labels_[q];
}

const Matrix& ChainComplex::diff(int q) const {
  if (q < 0 || q > top_degree())
    throw std::out_of_range("ChainComplex::diff: degree out of range");
  return diffs_[q];
}

HomologyDescriptor homology_at(const ChainComplex& c, int q) {
  if (q < 0 || q >= c.top_degree())
    throw std::invalid_argument(
        "homology_at: missing adjacent differential; extend the complex by "
        "one degree");
  const GroundRing& ring = c.ring();
  const Matrix& dq = c.diff(q);
  const Matrix& dq1 = c.diff(q + 1);
  const int n = c.dim(q);

  // Kernel generators as columns of K, then the relation matrix R whose
  // column span expresses which kernel combinations are boundaries.
  Matrix kmat(ring, n, 0);
  Matrix rmat(ring, 0, 0);
  if (ring.kind() == RingKind::Residue) {
    kmat = kernel(dq);
    const int k = kmat.cols();
    Matrix kk = kernel(kmat.hstack(dq1));
    rmat = Matrix(ring, k, kk.cols());
    for (const auto& [ij, val] : kk.entries())
      if (ij.first < k) rmat.set(ij.first, ij.second, val);
  } else {
    SmithDecomposition snf =
        smith_normal_form(dq, SmithOptions{false, true, false, true});
    const int k = n - snf.rank;
    kmat = Matrix(ring, n, k);
    for (int j = 0; j < k; ++j)
      kmat.set_column(j, snf.V.column(snf.rank + j));
    // In the V-coordinates of degree q a cycle has zero leading block, so
    // boundary columns live entirely in the trailing k rows.
    Matrix y = snf.Vinv.mul(dq1);
    rmat = Matrix(ring, k, dq1.cols());
    for (const auto& [ij, val] : y.entries()) {
      if (ij.first < snf.rank)
        throw std::logic_error("homology_at: boundary is not a cycle");
      rmat.set(ij.first - snf.rank, ij.second, val);
    }
  }

  const int k = kmat.cols();
  SmithDecomposition rel =
      smith_normal_form(rmat, SmithOptions{false, false, true, false});

  HomologyDescriptor out;
  out.degree = q;
  std::vector<Int> torsion;
  for (int i = 0; i < k; ++i) {
    RingElement s = i < rel.rank ? rel.S.get(i, i) : ring.zero();
    if (i < rel.rank && ring.is_unit(s)) continue;
    Vec gen = kmat.apply(rel.Uinv.column(i));
    if (i < rel.rank) {
      if (ring.is_field())
        throw std::logic_error("homology_at: torsion over a field");
      torsion.push_back(s.num);
      out.torsion_generators.push_back(std::move(gen));
    } else {
      out.free_generators.push_back(std::move(gen));
    }
  }
  out.module = ModuleDescriptor(
      static_cast<long long>(out.free_generators.size()), std::move(torsion));

  // Witness audit: every generator is a cycle and not a boundary, and each
  // torsion generator becomes a boundary after scaling by its factor.
  for (const Vec& g : out.free_generators)
    if (!is_zero_vec(ring, dq.apply(g)))
      throw std::logic_error("homology_at: generator is not a cycle");
  for (const Vec& g : out.torsion_generators)
    if (!is_zero_vec(ring, dq.apply(g)))
      throw std::logic_error("homology_at: generator is not a cycle");
  if (ring.kind() == RingKind::Residue) {
    for (const Vec& g : out.free_generators)
      if (solve(dq1, g))
        throw std::logic_error("homology_at: free generator is a boundary");
    for (std::size_t i = 0; i < out.torsion_generators.size(); ++i) {
      const Vec& g = out.torsion_generators[i];
      if (solve(dq1, g))
        throw std::logic_error("homology_at: torsion generator is a boundary");
      Vec scaled =
          scale_vec(ring, ring.from_int(out.module.torsion[i]), g);
      if (!solve(dq1, scaled))
        throw std::logic_error(
            "homology_at: scaled torsion generator fails to bound");
    }
  } else if (!out.free_generators.empty() || !out.torsion_generators.empty()) {
    SmithDecomposition bnd =
        smith_normal_form(dq1, SmithOptions{true, false, false, false});
    for (const Vec& g : out.free_generators)
      if (smith_solvable(ring, bnd, g))
        throw std::logic_error("homology_at: free generator is a boundary");
    for (std::size_t i = 0; i < out.torsion_generators.size(); ++i) {
      const Vec& g = out.torsion_generators[i];
      if (smith_solvable(ring, bnd, g))
        throw std::logic_error("homology_at: torsion generator is a boundary");
      Vec scaled =
          scale_vec(ring, ring.from_int(out.module.torsion[i]), g);
      if (!smith_solvable(ring, bnd, scaled))
        throw std::logic_error(
            "homology_at: scaled torsion generator fails to bound");
    }
  }
  return out;
}

bool is_cycle(const ChainComplex& c, int q, const Vec& z) {
  if (q < 0 || q > c.top_degree())
    throw std::invalid_argument("is_cycle: degree out of range");
  if (static_cast<int>(z.size()) != c.dim(q))
    throw std::invalid_argument("is_cycle: shape mismatch");
  return is_zero_vec(c.ring(), c.diff(q).apply(z));
}

bool is_boundary(const ChainComplex& c, int q, const Vec& z) {
  if (q < 0 || q >= c.top_degree())
    throw std::invalid_argument("is_boundary: missing adjacent differential");
  if (static_cast<int>(z.size()) != c.dim(q))
    throw std::invalid_argument("is_boundary: shape mismatch");
  return solve(c.diff(q + 1), z).has_value();
}

bool classes_equal(const ChainComplex& c, int q, const Vec& z1,
                   const Vec& z2) {
  if (!is_cycle(c, q, z1) || !is_cycle(c, q, z2))
    throw std::invalid_argument("classes_equal: inputs must be cycles");
  return is_boundary(c, q, sub_vec(c.ring(), z1, z2));
}

std::optional<ClassCoordinates> class_coordinates(const ChainComplex& c,
                                                  const HomologyDescriptor& h,
                                                  const Vec& z) {
  const int q = h.degree;
  if (static_cast<int>(z.size()) != c.dim(q))
    throw std::invalid_argument("class_coordinates: shape mismatch");
  if (!is_cycle(c, q, z)) return std::nullopt;
  const GroundRing& ring = c.ring();
  const int f = static_cast<int>(h.free_generators.size());
  const int t = static_cast<int>(h.torsion_generators.size());
  Matrix gens(ring, c.dim(q), f + t);
  for (int j = 0; j < f; ++j) gens.set_column(j, h.free_generators[j]);
  for (int j = 0; j < t; ++j) gens.set_column(f + j, h.torsion_generators[j]);
  auto x = solve(gens.hstack(c.diff(q + 1)), z);
  if (!x) return std::nullopt;
  ClassCoordinates out;
  out.free_coords.assign(x->begin(), x->begin() + f);
  out.torsion_coords.assign(x->begin() + f, x->begin() + f + t);
  return out;
}

bool class_generates(const ChainComplex& c, const HomologyDescriptor& h,
                     const Vec& z) {
  const GroundRing& ring = c.ring();
  if (h.module.is_zero()) return is_boundary(c, h.degree, z);
  auto coords = class_coordinates(c, h, z);
  if (!coords) return false;
  if (h.module.free_rank == 1 && h.module.torsion.empty())
    return ring.is_unit(coords->free_coords[0]);
  if (h.module.free_rank == 0 && h.module.torsion.size() == 1) {
    Int cnum = coords->torsion_coords[0].num;
    if (cnum < 0) cnum = -cnum;
    return boost::multiprecision::gcd(cnum, h.module.torsion[0]) == 1;
  }
  throw std::invalid_argument("class_generates: module is not cyclic");
}

ChainComplex change_ring(const ChainComplex& c, const GroundRing& ring2) {
  if (!(c.ring() == GroundRing::integers()))
    throw std::invalid_argument("change_ring: source must be over Z");
  std::vector<std::vector<std::string>> labels;
  std::vector<Matrix> diffs;
  for (int q = 0; q <= c.top_degree(); ++q) {
    labels.push_back(c.labels(q));
    const Matrix& d = c.diff(q);
    Matrix m(ring2, d.rows(), d.cols());
    for (const auto& [ij, val] : d.entries())
      m.set(ij.first, ij.second, ring2.from_int(val.num));
    diffs.push_back(std::move(m));
  }
  return ChainComplex(ring2, std::move(labels), std::move(diffs));
}

ModuleDescriptor combine_descriptors(const GroundRing& ring,
                                     const std::vector<ModuleDescriptor>& ds) {
  long long free_total = 0;
  std::vector<Int> torsion;
  for (const ModuleDescriptor& d : ds) {
    free_total += d.free_rank;
    torsion.insert(torsion.end(), d.torsion.begin(), d.torsion.end());
  }
  const int t = static_cast<int>(torsion.size());
  if (free_total > 0 && t == 0)
    return ModuleDescriptor(free_total, {});
  Matrix pres(ring, static_cast<int>(free_total) + t, t);
  for (int j = 0; j < t; ++j)
    pres.set(static_cast<int>(free_total) + j, j, ring.from_int(torsion[j]));
  return cokernel_descriptor(pres);
}

}  // namespace hhsq
