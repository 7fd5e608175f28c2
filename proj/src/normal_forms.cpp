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

#include "hhsq/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhsq {

namespace {

using Dense = std::vector<Vec>;

Dense to_dense(const Matrix& m) {
  Dense d(m.rows(), zero_vec(m.ring(), m.cols()));
  for (const auto& [ij, v] : m.entries()) d[ij.first][ij.second] = v;
  return d;
}

Matrix from_dense(const GroundRing& ring, const Dense& d, int cols) {
  Matrix out(ring, static_cast<int>(d.size()), cols);
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    for (int j = 0; j < cols; ++j)
      if (!ring.is_zero(d[i][j])) out.set(i, j, d[i][j]);
  return out;
}

// Pivot size used by the smallest-pivot strategy. Any strictly decreasing
// measure works; remainders shrink it until the submatrix clears.
Int pivot_size(const GroundRing& ring, const RingElement& a) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return a.num < 0 ? Int(-a.num) : a.num;
    case RingKind::Rationals:
      return 1;
    default:
      return a.num;
  }
}

// Quotient for the reduction step; the remainder a - q*b is strictly smaller
// than b in the measure above (exactly zero over the fields).
RingElement reduction_quotient(const GroundRing& ring, const RingElement& a,
                               const RingElement& b) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::Residue: {
      if (ring.is_field()) return ring.mul(a, ring.inverse(b));
      return ring.from_int(a.num / b.num);
    }
    case RingKind::Rationals:
      return ring.mul(a, ring.inverse(b));
  }
  return ring.zero();
}

struct SmithState {
  GroundRing ring;
  Dense d;
  int rows, cols;
  Dense u, uinv, v, vinv;  // empty when not tracked
  bool track_u, track_uinv, track_v, track_vinv;

  void row_swap(int i, int j) {
    if (i == j) return;
    std::swap(d[i], d[j]);
    if (track_u) std::swap(u[i], u[j]);
    if (track_uinv)
      for (auto& row : uinv) std::swap(row[i], row[j]);
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (auto& row : d) std::swap(row[i], row[j]);
    if (track_v)
      for (auto& row : v) std::swap(row[i], row[j]);
    if (track_vinv) std::swap(vinv[i], vinv[j]);
  }
  // row i += c * row j
  void row_axpy(int i, int j, const RingElement& c) {
    for (int k = 0; k < cols; ++k)
      d[i][k] = ring.add(d[i][k], ring.mul(c, d[j][k]));
    if (track_u)
      for (int k = 0; k < rows; ++k)
        u[i][k] = ring.add(u[i][k], ring.mul(c, u[j][k]));
    if (track_uinv) {
      RingElement nc = ring.neg(c);
      for (int k = 0; k < rows; ++k)
        uinv[k][j] = ring.add(uinv[k][j], ring.mul(nc, uinv[k][i]));
    }
  }
  // col j += c * col k
  void col_axpy(int j, int k, const RingElement& c) {
    for (int i = 0; i < rows; ++i)
      d[i][j] = ring.add(d[i][j], ring.mul(c, d[i][k]));
    if (track_v)
      for (int i = 0; i < cols; ++i)
        v[i][j] = ring.add(v[i][j], ring.mul(c, v[i][k]));
    if (track_vinv) {
      RingElement nc = ring.neg(c);
      for (int i = 0; i < cols; ++i)
        vinv[k][i] = ring.add(vinv[k][i], ring.mul(nc, vinv[j][i]));
    }
  }
  void row_scale(int i, const RingElement& unit) {
    for (int k = 0; k < cols; ++k) d[i][k] = ring.mul(d[i][k], unit);
    if (track_u)
      for (int k = 0; k < rows; ++k) u[i][k] = ring.mul(u[i][k], unit);
    if (track_uinv) {
      RingElement inv = ring.inverse(unit);
      for (int k = 0; k < rows; ++k) uinv[k][i] = ring.mul(uinv[k][i], inv);
    }
  }
};

struct Xgcd {
  Int g, s, t;  // s*a + t*b == g
};

Xgcd xgcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& m,
                                     const SmithOptions& opts) {
  const GroundRing& ring = m.ring();
  const int rows = m.rows(), cols = m.cols();
  SmithState st{ring,
                to_dense(m),
                rows,
                cols,
                {},
                {},
                {},
                {},
                opts.need_u,
                opts.need_uinv,
                opts.need_v,
                opts.need_vinv};
  auto eye = [&](int n) {
    Dense d(n, zero_vec(ring, n));
    for (int i = 0; i < n; ++i) d[i][i] = ring.one();
    return d;
  };
  if (st.track_u) st.u = eye(rows);
  if (st.track_uinv) st.uinv = eye(rows);
  if (st.track_v) st.v = eye(cols);
  if (st.track_vinv) st.vinv = eye(cols);

  const int bound = std::min(rows, cols);
  int rank = 0;
  for (int t = 0; t < bound; ++t) {
    bool have_pivot = true;
    while (true) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (!ring.is_zero(st.d[i][j])) {
            Int size = pivot_size(ring, st.d[i][j]);
            if (pi < 0 || size < best) {
              pi = i;
              pj = j;
              best = size;
            }
          }
      if (pi < 0) {
        have_pivot = false;
        break;
      }
      st.row_swap(t, pi);
      st.col_swap(t, pj);
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (ring.is_zero(st.d[i][t])) continue;
        RingElement q = reduction_quotient(ring, st.d[i][t], st.d[t][t]);
        if (!ring.is_zero(q)) st.row_axpy(i, t, ring.neg(q));
        if (!ring.is_zero(st.d[i][t])) dirty = true;
      }
      if (!dirty) {
        for (int j = t + 1; j < cols; ++j) {
          if (ring.is_zero(st.d[t][j])) continue;
          RingElement q = reduction_quotient(ring, st.d[t][j], st.d[t][t]);
          if (!ring.is_zero(q)) st.col_axpy(j, t, ring.neg(q));
          if (!ring.is_zero(st.d[t][j])) dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot now isolated; fold in any row holding an entry the pivot does
      // not divide, so the diagonal comes out as a divisor chain.
      int offender = -1;
      for (int i = t + 1; i < rows && offender < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (!ring.divide(st.d[i][j], st.d[t][t])) {
            offender = i;
            break;
          }
      if (offender >= 0) {
        st.row_axpy(t, offender, ring.one());
        continue;
      }
      RingElement unit = ring.associate_unit(st.d[t][t]);
      if (!(unit == ring.one())) st.row_scale(t, unit);
      break;
    }
    if (!have_pivot) break;
    ++rank;
  }

  SmithDecomposition out{
      Matrix(ring, rows, cols),
      from_dense(ring, st.u, st.track_u ? rows : 0),
      from_dense(ring, st.v, st.track_v ? cols : 0),
      from_dense(ring, st.uinv, st.track_uinv ? rows : 0),
      from_dense(ring, st.vinv, st.track_vinv ? cols : 0),
      rank,
      {}};
  for (int i = 0; i < rank; ++i) {
    out.S.set(i, i, st.d[i][i]);
    out.invariant_factors.push_back(st.d[i][i]);
  }
  return out;
}

namespace {

// Row-canonical form over Z/n with pivot bookkeeping, kept on integer
// residues for speed. Implements the classic echelon + stabilizer-row
// construction; the result is unique for the row span.
struct ZnHowell {
  Int n;
  int width = 0;
  std::vector<std::vector<Int>> rows;
  std::vector<int> pivot_col;
};

ZnHowell howell_rows(const Int& n, std::vector<std::vector<Int>> work,
                     int width) {
  for (auto& row : work)
    for (auto& x : row) {
      x %= n;
      if (x < 0) x += n;
    }
  auto row_is_zero = [](const std::vector<Int>& row) {
    for (const Int& x : row)
      if (x != 0) return false;
    return true;
  };
  std::size_t r = 0;
  for (int j = 0; j < width; ++j) {
    std::size_t pivot = r;
    while (pivot < work.size() && work[pivot][j] == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[r], work[pivot]);
    for (std::size_t i = r + 1; i < work.size(); ++i) {
      if (work[i][j] == 0) continue;
      // Unimodular 2x2 transform sending the pair to (gcd, 0).
      Xgcd e = xgcd(work[r][j], work[i][j]);
      Int a_over = work[r][j] / e.g, b_over = work[i][j] / e.g;
      for (int k = j; k < width; ++k) {
        Int top = e.s * work[r][k] + e.t * work[i][k];
        Int bot = a_over * work[i][k] - b_over * work[r][k];
        top %= n;
        if (top < 0) top += n;
        bot %= n;
        if (bot < 0) bot += n;
        work[r][k] = std::move(top);
        work[i][k] = std::move(bot);
      }
    }
    // Scale so the pivot is the canonical divisor gcd(value, n).
    Int g = boost::multiprecision::gcd(work[r][j], n);
    if (work[r][j] != g) {
      GroundRing ring = GroundRing::residue(n);
      Int u = ring.associate_unit(RingElement{work[r][j], 1}).num;
      for (int k = j; k < width; ++k) work[r][k] = work[r][k] * u % n;
    }
    // Stabilizer row: (n/d) * row spans what leading-zero combinations can
    // reach; append it for later columns.
    Int stab = n / work[r][j];
    if (stab != 1) {
      std::vector<Int> extra(width, 0);
      for (int k = j; k < width; ++k) extra[k] = work[r][k] * stab % n;
      if (!row_is_zero(extra)) work.push_back(std::move(extra));
    }
    // Reduce entries above the pivot into [0, d).
    for (std::size_t i = 0; i < r; ++i) {
      if (work[i][j] == 0) continue;
      Int q = work[i][j] / work[r][j];
      if (q == 0) continue;
      for (int k = j; k < width; ++k) {
        work[i][k] -= q * work[r][k];
        work[i][k] %= n;
        if (work[i][k] < 0) work[i][k] += n;
      }
    }
    ++r;
    if (r == work.size()) break;
  }
  work.resize(r);
  ZnHowell out{n, width, std::move(work), {}};
  for (const auto& row : out.rows) {
    int p = 0;
    while (p < width && row[p] == 0) ++p;
    out.pivot_col.push_back(p);
  }
  return out;
}

std::vector<std::vector<Int>> residue_lift_rows(const Matrix& m) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols(), 0));
  for (const auto& [ij, v] : m.entries()) rows[ij.first][ij.second] = v.num;
  return rows;
}

// Howell of [M^T | I]; rows whose pivot lies in the identity block carry
// kernel generators, rows pivoted in the first block drive membership.
ZnHowell howell_augmented(const Matrix& m) {
  const Int& n = m.ring().modulus();
  const int b = m.rows(), c = m.cols();
  std::vector<std::vector<Int>> work(c, std::vector<Int>(b + c, 0));
  for (const auto& [ij, v] : m.entries()) work[ij.second][ij.first] = v.num;
  for (int i = 0; i < c; ++i) work[i][b + i] = 1;
  return howell_rows(n, std::move(work), b + c);
}

Matrix residue_kernel(const Matrix& m) {
  const GroundRing& ring = m.ring();
  ZnHowell h = howell_augmented(m);
  std::vector<int> gens;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    if (h.pivot_col[i] >= m.rows()) gens.push_back(static_cast<int>(i));
  Matrix out(ring, m.cols(), static_cast<int>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int j = 0; j < m.cols(); ++j)
      out.set(j, static_cast<int>(k),
              ring.from_int(h.rows[gens[k]][m.rows() + j]));
  return out;
}

std::optional<Vec> residue_solve(const Matrix& m, const Vec& v) {
  const GroundRing& ring = m.ring();
  const Int& n = ring.modulus();
  ZnHowell h = howell_augmented(m);
  std::vector<Int> target(m.rows());
  for (int i = 0; i < m.rows(); ++i) target[i] = v[i].num;
  std::vector<Int> witness(m.cols(), 0);
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    int p = h.pivot_col[i];
    if (p >= m.rows()) break;
    if (target[p] == 0) continue;
    const Int& d = h.rows[i][p];
    if (target[p] % d != 0) return std::nullopt;
    Int c = target[p] / d;
    for (int k = p; k < m.rows(); ++k) {
      target[k] -= c * h.rows[i][k];
      target[k] %= n;
      if (target[k] < 0) target[k] += n;
    }
    for (int k = 0; k < m.cols(); ++k)
      witness[k] = (witness[k] + c * h.rows[i][m.rows() + k]) % n;
  }
  for (const Int& x : target)
    if (x != 0) return std::nullopt;
  Vec out(m.cols());
  for (int k = 0; k < m.cols(); ++k) out[k] = ring.from_int(witness[k]);
  return out;
}

}  // namespace

std::optional<Vec> solve_with(const SmithDecomposition& snf, const Vec& v) {
  const GroundRing& ring = snf.S.ring();
  const int rows = snf.S.rows();
  const int cols = snf.S.cols();
  if (snf.U.rows() != rows || snf.V.rows() != cols)
    throw std::invalid_argument("solve_with: decomposition lacks U or V");
  if (static_cast<int>(v.size()) != rows)
    throw std::invalid_argument("solve_with: shape mismatch");
  Vec z = snf.U.apply(v);
  Vec w = zero_vec(ring, cols);
  for (int i = 0; i < rows; ++i) {
    if (i < snf.rank) {
      auto q = ring.divide(z[i], snf.S.get(i, i));
      if (!q) return std::nullopt;
      if (i < cols) w[i] = *q;
    } else if (!ring.is_zero(z[i])) {
      return std::nullopt;
    }
  }
  return snf.V.apply(w);
}

Matrix howell_form(const Matrix& m) {
  if (m.ring().kind() != RingKind::Residue)
    throw std::domain_error("howell_form: ring must be Z/n");
  ZnHowell h = howell_rows(m.ring().modulus(), residue_lift_rows(m), m.cols());
  Matrix out(m.ring(), static_cast<int>(h.rows.size()), m.cols());
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.set(static_cast<int>(i), j, m.ring().from_int(h.rows[i][j]));
  return out;
}

Matrix kernel(const Matrix& m) {
  const GroundRing& ring = m.ring();
  if (ring.kind() == RingKind::Residue) return residue_kernel(m);
  SmithDecomposition snf =
      smith_normal_form(m, SmithOptions{false, true, false, false});
  Matrix out(ring, m.cols(), m.cols() - snf.rank);
  for (int k = snf.rank; k < m.cols(); ++k)
    out.set_column(k - snf.rank, snf.V.column(k));
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("solve: shape mismatch");
  if (m.ring().kind() == RingKind::Residue) return residue_solve(m, v);
  return solve_with(smith_normal_form(m, SmithOptions{true, true, false, false}),
                    v);
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || !(a.ring() == b.ring()))
    throw std::invalid_argument("same_column_span: shape mismatch");
  for (int j = 0; j < b.cols(); ++j)
    if (!solve(a, b.column(j))) return false;
  for (int j = 0; j < a.cols(); ++j)
    if (!solve(b, a.column(j))) return false;
  return true;
}

RingElement determinant(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const GroundRing& ring = m.ring();
  const int n = m.rows();
  if (n == 0) return ring.one();
  if (ring.kind() == RingKind::Rationals) {
    Dense d = to_dense(m);
    RingElement det = ring.one();
    for (int t = 0; t < n; ++t) {
      int p = t;
      while (p < n && ring.is_zero(d[p][t])) ++p;
      if (p == n) return ring.zero();
      if (p != t) {
        std::swap(d[p], d[t]);
        det = ring.neg(det);
      }
      det = ring.mul(det, d[t][t]);
      RingElement inv = ring.inverse(d[t][t]);
      for (int i = t + 1; i < n; ++i) {
        if (ring.is_zero(d[i][t])) continue;
        RingElement f = ring.mul(d[i][t], inv);
        for (int j = t; j < n; ++j)
          d[i][j] = ring.sub(d[i][j], ring.mul(f, d[t][j]));
      }
    }
    return det;
  }
  // Fraction-free Bareiss on integer lifts; exact for Z and reduces cleanly
  // for the modular kinds.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (const auto& [ij, v] : m.entries()) a[ij.first][ij.second] = v.num;
  Int prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (a[t][t] == 0) {
      int p = t + 1;
      while (p < n && a[p][t] == 0) ++p;
      if (p == n) return ring.zero();
      std::swap(a[p], a[t]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
    prev = a[t][t];
  }
  Int det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return ring.from_int(det);
}

ModuleDescriptor cokernel_descriptor(const Matrix& m) {
  const GroundRing& ring = m.ring();
  SmithDecomposition snf =
      smith_normal_form(m, SmithOptions{false, false, false, false});
  std::vector<Int> torsion;
  long long free = m.rows() - snf.rank;
  for (const RingElement& d : snf.invariant_factors) {
    if (ring.is_unit(d)) continue;
    if (ring.is_field())
      throw std::logic_error("cokernel_descriptor: non-unit factor in field");
    torsion.push_back(d.num);
  }
  return ModuleDescriptor(free, std::move(torsion));
}

}  // namespace hhsq
