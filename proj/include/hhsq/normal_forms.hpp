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

#include "hhsq/matrix.hpp"

namespace hhsq {

// U * M * V == S with U, V invertible over the ring and S diagonal, each
// diagonal entry dividing the next. Over Z the entries are nonnegative with
// |det U| = |det V| = 1; over Z/n they are canonical divisors of n; over a
// field they are 0/1. Inverse transforms are accumulated alongside.
struct SmithDecomposition {
  Matrix S, U, V, Uinv, Vinv;
  int rank = 0;                 // nonzero diagonal entries
  std::vector<RingElement> invariant_factors;  // the nonzero diagonal
};

// Which transform matrices to accumulate (the big homology runs skip the
// unused ones; S and rank are always produced).
struct SmithOptions {
  bool need_u = true;
  bool need_v = true;
  bool need_uinv = true;
  bool need_vinv = true;
};

SmithDecomposition smith_normal_form(const Matrix& m,
                                     const SmithOptions& opts = {});

// Canonical row form over Z/n: echelon rows with pivots that divide the
// modulus, entries above a pivot reduced below it, and the row span closed
// under leading-zero truncation (so membership tests are a single sweep).
// Only residue rings are accepted.
Matrix howell_form(const Matrix& m);

// Columns spanning {x : M x = 0}. Fields and Z route through the Smith form;
// Z/n routes through the Howell form. Over Z the columns are a lattice basis;
// over Z/n they generate the kernel but need not be independent.
Matrix kernel(const Matrix& m);

// Some x with M x = v, or nullopt when v is outside the column span.
std::optional<Vec> solve(const Matrix& m, const Vec& v);

// Solve against an already-computed Smith decomposition (must carry U and V).
// Cheaper than solve() when many right-hand sides share one matrix; not for
// residue rings, whose solver routes through the Howell form instead.
std::optional<Vec> solve_with(const SmithDecomposition& snf, const Vec& v);

// Mutual column-span containment.
bool same_column_span(const Matrix& a, const Matrix& b);

// Exact determinant (square matrices; fraction-free elimination on integer
// lifts for Z, F_p and Z/n, rational elimination for Q).
RingElement determinant(const Matrix& m);

// Invariant factors of coker(M: ring^cols -> ring^rows) as a module
// descriptor. Used to fold direct sums into canonical form.
ModuleDescriptor cokernel_descriptor(const Matrix& m);

}  // namespace hhsq
