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

#include "hhsq/summand.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace hhsq {

namespace {

std::vector<std::string> label_row(const std::vector<Simplex>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const Simplex& s : basis) out.push_back(simplex_str(s));
  return out;
}

// Differential matrices for a degree-indexed family of bases closed under
// the boundary (up to dropped terms). With `normalized` set, degenerate
// boundary terms are projected away instead of looked up.
std::vector<Matrix> boundary_matrices(
    const GroundRing& ring, const std::vector<std::vector<Simplex>>& bases,
    bool normalized) {
  const int top = static_cast<int>(bases.size()) - 1;
  std::vector<Matrix> diffs;
  diffs.reserve(bases.size());
  diffs.emplace_back(ring, 0, static_cast<int>(bases[0].size()));
  for (int q = 1; q <= top; ++q) {
    std::map<Simplex, int> index;
    for (std::size_t i = 0; i < bases[q - 1].size(); ++i)
      index.emplace(bases[q - 1][i], static_cast<int>(i));
    Matrix d(ring, static_cast<int>(bases[q - 1].size()),
             static_cast<int>(bases[q].size()));
    for (std::size_t j = 0; j < bases[q].size(); ++j) {
      Chain bd = boundary(ring, bases[q][j]);
      for (const auto& [s, coeff] : bd.terms()) {
        if (normalized && is_degenerate(s)) continue;
        auto it = index.find(s);
        if (it == index.end())
          throw std::logic_error(
              "boundary_matrices: boundary term escapes the basis");
        d.set(it->second, static_cast<int>(j), coeff);
      }
    }
    diffs.push_back(std::move(d));
  }
  return diffs;
}

ChainComplex complex_from_bases(const GroundRing& ring,
                                const std::vector<std::vector<Simplex>>& bases,
                                bool normalized) {
  std::vector<std::vector<std::string>> labels;
  labels.reserve(bases.size());
  for (const auto& b : bases) labels.push_back(label_row(b));
  return ChainComplex(ring, std::move(labels),
                      boundary_matrices(ring, bases, normalized));
}

}  // namespace

BudgetExceeded::BudgetExceeded(int degree_, long long dimension_,
                               long long budget_)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "degree " << degree_ << " needs " << dimension_
           << " basis elements, over the budget of " << budget_;
        return os.str();
      }()),
      degree(degree_),
      dimension(dimension_),
      budget(budget_) {}

std::vector<Simplex> summand_basis(const CyclicWord& w, int q) {
  const int m = w.length();
  std::vector<Simplex> out;
  if (m == 0) {
    if (q == 0) out.push_back(Simplex{{0}});
    return out;
  }
  if (q == m - 1) {
    for (const Word& rot : rotations(w)) out.push_back(Simplex{rot});
  } else if (q == m) {
    for (const Word& rot : rotations(w)) {
      std::vector<int> factors;
      factors.reserve(m + 1);
      factors.push_back(0);
      factors.insert(factors.end(), rot.begin(), rot.end());
      out.push_back(Simplex{std::move(factors)});
    }
  }
  return out;
}

SummandComplex build_summand_complex(const CyclicWord& w,
                                     const GroundRing& ring, int top_degree) {
  const int m = w.length();
  const int top = top_degree < 0 ? m + 2 : top_degree;
  if (top < m + 1)
    throw std::invalid_argument(
        "build_summand_complex: top degree must exceed the word length");
  std::vector<std::vector<Simplex>> bases;
  for (int q = 0; q <= top; ++q) bases.push_back(summand_basis(w, q));
  ChainComplex cx = complex_from_bases(ring, bases, true);
  return SummandComplex{w, std::move(bases), std::move(cx)};
}

SummandComplex build_raw_summand_complex(const CyclicWord& w, int r,
                                         const GroundRing& ring,
                                         int top_degree) {
  if (top_degree < 0)
    throw std::invalid_argument("build_raw_summand_complex: bad top degree");
  for (int letter : w.representative)
    if (letter > r)
      throw std::invalid_argument(
          "build_raw_summand_complex: word uses letters past r");
  std::vector<std::vector<Simplex>> bases(top_degree + 1);
  for (int q = 0; q <= top_degree; ++q) {
    std::vector<int> factors(q + 1, 0);
    while (true) {
      Simplex s{factors};
      if (summand_of(s) == w) bases[q].push_back(s);
      int slot = q;
      while (slot >= 0 && factors[slot] == r) factors[slot--] = 0;
      if (slot < 0) break;
      ++factors[slot];
    }
  }
  ChainComplex cx = complex_from_bases(ring, bases, false);
  return SummandComplex{w, std::move(bases), std::move(cx)};
}

FullComplex build_full_complex(int r, const GroundRing& ring, int max_q,
                               long long budget, ExecutionMode mode) {
  if (r < 1) throw std::invalid_argument("build_full_complex: r must be >= 1");
  if (max_q < 0)
    throw std::invalid_argument("build_full_complex: negative degree");
  const int top = max_q + 1;
  long long dim = 1;
  const long long cap = std::numeric_limits<long long>::max() / (r + 1);
  for (int q = 0; q <= top; ++q) {
    if (dim > budget / (r + 1)) {
      long long needed =
          dim <= cap ? dim * (r + 1) : std::numeric_limits<long long>::max();
      throw BudgetExceeded(q, needed, budget);
    }
    dim *= r + 1;
    if (dim > budget) throw BudgetExceeded(q, dim, budget);
  }

  std::vector<std::vector<Simplex>> bases(top + 1);
  for (int q = 0; q <= top; ++q) {
    std::vector<int> factors(q + 1, 0);
    while (true) {
      bases[q].push_back(Simplex{factors});
      int slot = q;
      while (slot >= 0 && factors[slot] == r) factors[slot--] = 0;
      if (slot < 0) break;
      ++factors[slot];
    }
  }

  // Columns are independent, so they can be produced in parallel and then
  // written into the matrix in index order.
  std::vector<std::vector<std::string>> labels;
  labels.reserve(bases.size());
  for (const auto& b : bases) labels.push_back(label_row(b));
  std::vector<Matrix> diffs;
  diffs.emplace_back(ring, 0, static_cast<int>(bases[0].size()));
  for (int q = 1; q <= top; ++q) {
    const int cols = static_cast<int>(bases[q].size());
    const int rows = static_cast<int>(bases[q - 1].size());
    std::vector<std::vector<std::pair<int, RingElement>>> col_terms(cols);
    parallel_for(cols, mode, [&](int j) {
      Chain bd = boundary(ring, bases[q][j]);
      for (const auto& [s, coeff] : bd.terms()) {
        int row = 0;
        for (int v : s.factors) row = row * (r + 1) + v;
        col_terms[j].emplace_back(row, coeff);
      }
    });
    Matrix d(ring, rows, cols);
    for (int j = 0; j < cols; ++j)
      for (const auto& [row, coeff] : col_terms[j]) d.set(row, j, coeff);
    diffs.push_back(std::move(d));
  }
  ChainComplex cx(ring, std::move(labels), std::move(diffs));
  return FullComplex{r, std::move(bases), std::move(cx)};
}

Vec summand_coordinates(const SummandComplex& sc, const Chain& c) {
  const int q = c.degree();
  if (q < 0 || q >= static_cast<int>(sc.bases.size()))
    throw std::invalid_argument("summand_coordinates: degree out of range");
  const std::vector<Simplex>& basis = sc.bases[q];
  Vec out = zero_vec(c.ring(), static_cast<int>(basis.size()));
  for (const auto& [s, coeff] : c.terms()) {
    auto it = std::find(basis.begin(), basis.end(), s);
    if (it == basis.end())
      throw std::invalid_argument(
          "summand_coordinates: term outside the slice");
    out[it - basis.begin()] = coeff;
  }
  return out;
}

Chain summand_chain(const SummandComplex& sc, int q, const Vec& coords) {
  if (q < 0 || q >= static_cast<int>(sc.bases.size()))
    throw std::invalid_argument("summand_chain: degree out of range");
  const std::vector<Simplex>& basis = sc.bases[q];
  if (coords.size() != basis.size())
    throw std::invalid_argument("summand_chain: shape mismatch");
  Chain out = zero_chain(sc.complex.ring(), q);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.add_term(basis[i], coords[i]);
  return out;
}

Vec full_coordinates(const FullComplex& fc, const Chain& c) {
  const int q = c.degree();
  if (q < 0 || q >= static_cast<int>(fc.bases.size()))
    throw std::invalid_argument("full_coordinates: degree out of range");
  Vec out = zero_vec(c.ring(), static_cast<int>(fc.bases[q].size()));
  for (const auto& [s, coeff] : c.terms()) {
    long long idx = 0;
    for (int v : s.factors) {
      if (v > fc.r)
        throw std::invalid_argument("full_coordinates: letter past r");
      idx = idx * (fc.r + 1) + v;
    }
    out[idx] = coeff;
  }
  return out;
}

std::map<CyclicWord, Chain> decompose_chain(const Chain& c) {
  std::map<CyclicWord, Chain> out;
  for (const auto& [s, coeff] : c.terms()) {
    CyclicWord w = summand_of(s);
    auto it = out.find(w);
    if (it == out.end())
      it = out.emplace(w, zero_chain(c.ring(), c.degree())).first;
    it->second.add_term(s, coeff);
  }
  return out;
}

Chain component_at(const Chain& c, const CyclicWord& w) {
  Chain out = zero_chain(c.ring(), c.degree());
  for (const auto& [s, coeff] : c.terms())
    if (summand_of(s) == w) out.add_term(s, coeff);
  return out;
}

AggregateHomology aggregate_homology(int r, const GroundRing& ring, int q,
                                     ExecutionMode mode) {
  if (r < 1 || q < 0)
    throw std::invalid_argument("aggregate_homology: bad parameters");
  std::vector<CyclicWord> words = enumerate_necklaces(r, q);
  std::vector<CyclicWord> longer = enumerate_necklaces(r, q + 1);
  words.insert(words.end(), longer.begin(), longer.end());

  std::vector<HomologyDescriptor> parts(words.size());
  parallel_for(static_cast<int>(words.size()), mode, [&](int i) {
    SummandComplex sc = build_summand_complex(words[i], ring);
    parts[i] = homology_at(sc.complex, q);
  });

  AggregateHomology out;
  out.degree = q;
  std::vector<ModuleDescriptor> modules;
  modules.reserve(parts.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    modules.push_back(parts[i].module);
    if (!parts[i].module.is_zero())
      out.parts.push_back(SummandContribution{words[i], std::move(parts[i])});
  }
  out.module = combine_descriptors(ring, modules);
  return out;
}

}  // namespace hhsq
