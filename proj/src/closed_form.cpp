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

#include "hhsq/closed_form.hpp"

#include <string>
#include <utility>

namespace hhsq {

namespace {

// Index of t^u(rep) inside the rotation-order basis, where t rotates the
// last letter to the front and the basis lists left rotations.
int rotation_index(int ell, int u) { return (ell - (u % ell)) % ell; }

// (-1)^e as a ring element.
RingElement sign_pow(const GroundRing& ring, long long e) {
  return e % 2 == 0 ? ring.one() : ring.neg(ring.one());
}

}  // namespace

HomologyCase classify(const CyclicWord& w) {
  const int m = w.length();
  if (m == 0) return HomologyCase::EmptyWord;
  if (m % 2 == 1 || w.period % 2 == 0) return HomologyCase::FreePair;
  return HomologyCase::TorsionPair;
}

int case_number(HomologyCase c) { return static_cast<int>(c); }

std::map<int, ModuleDescriptor> predict(const CyclicWord& w,
                                        const GroundRing& ring) {
  std::map<int, ModuleDescriptor> out;
  const int m = w.length();
  switch (classify(w)) {
    case HomologyCase::EmptyWord:
      out.emplace(0, ModuleDescriptor(1, {}));
      break;
    case HomologyCase::FreePair:
      out.emplace(m - 1, ModuleDescriptor(1, {}));
      out.emplace(m, ModuleDescriptor(1, {}));
      break;
    case HomologyCase::TorsionPair: {
      ModuleDescriptor quot = mod_two_quotient(ring).module;
      ModuleDescriptor tors = two_torsion(ring).module;
      if (!quot.is_zero()) out.emplace(m - 1, quot);
      if (!tors.is_zero()) out.emplace(m, tors);
      break;
    }
  }
  return out;
}

ModuleDescriptor predicted_at(const std::map<int, ModuleDescriptor>& p,
                              int q) {
  auto it = p.find(q);
  return it == p.end() ? ModuleDescriptor() : it->second;
}

Chain generator_low(const CyclicWord& w, const GroundRing& ring) {
  if (w.length() == 0) return chain_of(ring, Simplex{{0}});
  return chain_of(ring, Simplex{w.representative});
}

Chain generator_high(const CyclicWord& w, const GroundRing& ring,
                     const RingElement& a) {
  const int m = w.length();
  if (m == 0)
    throw std::invalid_argument(
        "generator_high: the empty word has no upper degree");
  const HomologyCase c = classify(w);
  if (c == HomologyCase::TorsionPair &&
      !ring.is_zero(ring.add(a, a)))
    throw std::invalid_argument(
        "generator_high: coefficient must be killed by 2");
  const int ell = w.period;
  Chain out = zero_chain(ring, m);
  std::vector<Word> rots = rotations(w);
  for (int u = 0; u < ell; ++u) {
    RingElement coeff =
        c == HomologyCase::FreePair
            ? ring.mul(a, sign_pow(ring, static_cast<long long>(m - 1) * u))
            : a;
    std::vector<int> factors;
    factors.reserve(m + 1);
    factors.push_back(0);
    const Word& rot = rots[rotation_index(ell, u)];
    factors.insert(factors.end(), rot.begin(), rot.end());
    out.add_term(Simplex{std::move(factors)}, coeff);
  }
  return out;
}

ReferenceComplex reference_complex(const CyclicWord& w,
                                   const GroundRing& ring) {
  const int m = w.length();
  if (m == 0)
    throw std::invalid_argument(
        "reference_complex: the empty word has no rotation model");
  const int ell = w.period;
  const bool plus = classify(w) == HomologyCase::TorsionPair;
  const int top = m + 2;

  std::vector<std::vector<std::string>> labels(top + 1);
  for (int u = 0; u < ell; ++u) {
    labels[m - 1].push_back("e" + std::to_string(u));
    labels[m].push_back("f" + std::to_string(u));
  }
  std::vector<Matrix> diffs;
  for (int q = 0; q <= top; ++q) {
    Matrix d(ring, q == 0 ? 0 : static_cast<int>(labels[q - 1].size()),
             static_cast<int>(labels[q].size()));
    if (q == m) {
      RingElement off = plus ? ring.one() : ring.neg(ring.one());
      for (int u = 0; u < ell; ++u) {
        int wrap = (u + 1) % ell;
        if (wrap == u) {
          d.set(u, u, ring.add(ring.one(), off));
        } else {
          d.set(u, u, ring.one());
          d.set(wrap, u, off);
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ReferenceComplex{w, plus,
                          ChainComplex(ring, std::move(labels),
                                       std::move(diffs))};
}

ComparisonReport compare_with_reference(const CyclicWord& w,
                                        const GroundRing& ring) {
  const int m = w.length();
  if (m == 0)
    throw std::invalid_argument(
        "compare_with_reference: the empty word has no rotation model");
  const int ell = w.period;
  SummandComplex slice = build_summand_complex(w, ring);
  ReferenceComplex ref = reference_complex(w, ring);
  const bool plus = ref.plus;

  Matrix low(ring, ell, ell);
  Matrix high(ring, ell, ell);
  for (int u = 0; u < ell; ++u) {
    RingElement sgn =
        plus ? ring.one()
             : sign_pow(ring, static_cast<long long>(m - 1) * u);
    int row = rotation_index(ell, u);
    low.set(row, u, sgn);
    high.set(row, u, sgn);
  }

  ComparisonReport report{w, low, high, false, false, false};
  report.squares_commute =
      slice.complex.diff(m).mul(high) == low.mul(ref.complex.diff(m));

  bool bijective = true;
  std::vector<bool> seen_low(ell, false), seen_high(ell, false);
  auto check = [&](const Matrix& a, std::vector<bool>& seen) {
    std::vector<int> per_col(ell, 0);
    for (const auto& [ij, val] : a.entries()) {
      ++per_col[ij.second];
      if (!ring.is_unit(val) || seen[ij.first]) bijective = false;
      seen[ij.first] = true;
    }
    for (int j = 0; j < ell; ++j)
      if (per_col[j] != 1) bijective = false;
  };
  check(low, seen_low);
  check(high, seen_high);
  report.bijective_on_bases = bijective;

  std::map<int, ModuleDescriptor> expected = predict(w, ring);
  report.reference_homology_matches =
      homology_at(ref.complex, m - 1).module == predicted_at(expected, m - 1) &&
      homology_at(ref.complex, m).module == predicted_at(expected, m);
  return report;
}

ExactnessReport verify_exact_sequence(int ell, const GroundRing& ring) {
  if (ell < 1 || ell % 2 == 0)
    throw std::invalid_argument(
        "verify_exact_sequence: cyclic order must be odd and positive");
  ExactnessReport report;
  report.ell = ell;

  Matrix shift_plus(ring, ell, ell);
  for (int u = 0; u < ell; ++u) {
    int wrap = (u + 1) % ell;
    if (wrap == u) {
      shift_plus.set(u, u, ring.add(ring.one(), ring.one()));
    } else {
      shift_plus.set(u, u, ring.one());
      shift_plus.set(wrap, u, ring.one());
    }
  }

  // Injectivity of a |-> a * norm on {a : 2a = 0}: the stacked column of
  // norm entries plus a final 2 has trivial kernel exactly when no
  // 2-torsion element dies.
  Matrix stacked(ring, ell + 1, 1);
  for (int i = 0; i < ell; ++i) stacked.set(i, 0, ring.one());
  stacked.set(ell, 0, ring.from_int(2));
  report.injects = kernel(stacked).cols() == 0;

  CyclicSummand tors = two_torsion(ring);
  Matrix norm_image(ring, ell, tors.generator ? 1 : 0);
  if (tors.generator)
    for (int i = 0; i < ell; ++i) norm_image.set(i, 0, *tors.generator);
  report.exact_at_first =
      same_column_span(kernel(shift_plus), norm_image);

  // Kernel of the mod-2 sum, as the first block of the kernel of
  // [1 ... 1 | -2] so the 2c slack is carried along.
  Matrix sum_slack(ring, 1, ell + 1);
  for (int i = 0; i < ell; ++i) sum_slack.set(0, i, ring.one());
  sum_slack.set(0, ell, ring.from_int(-2));
  Matrix slack_kernel = kernel(sum_slack);
  Matrix sum_kernel(ring, ell, slack_kernel.cols());
  for (const auto& [ij, val] : slack_kernel.entries())
    if (ij.first < ell) sum_kernel.set(ij.first, ij.second, val);
  report.exact_at_second = same_column_span(sum_kernel, shift_plus);

  CyclicSummand quot = mod_two_quotient(ring);
  if (!quot.generator) {
    report.surjects = true;  // the target is zero
  } else {
    report.surjects =
        solve(sum_slack, Vec{*quot.generator}).has_value();
  }

  Matrix aug(ring, 1, ell);
  for (int i = 0; i < ell; ++i) aug.set(0, i, ring.one());
  Matrix norm(ring, ell, 1);
  for (int i = 0; i < ell; ++i) norm.set(i, 0, ring.one());
  report.composite_is_ell =
      aug.mul(norm).get(0, 0) == ring.from_int(ell);
  return report;
}

}  // namespace hhsq
