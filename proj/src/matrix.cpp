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

#include "hhsq/matrix.hpp"

#include <stdexcept>

namespace hhsq {

Matrix::Matrix(GroundRing ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("Matrix: negative dimension");
}

Matrix Matrix::identity(const GroundRing& ring, int n) {
  Matrix out(ring, n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, ring.one());
  return out;
}

Matrix Matrix::from_rows(const GroundRing& ring,
                         const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix out(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) out.set(i, j, ring.from_int(rows[i][j]));
  }
  return out;
}

RingElement Matrix::get(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("Matrix::get: index out of range");
  auto it = entries_.find({i, j});
  return it == entries_.end() ? ring_.zero() : it->second;
}

void Matrix::set(int i, int j, const RingElement& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("Matrix::set: index out of range");
  if (ring_.is_zero(v))
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

Matrix Matrix::mul(const Matrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("Matrix::mul: shape mismatch");
  if (!(ring_ == other.ring_))
    throw std::invalid_argument("Matrix::mul: ring mismatch");
  Matrix out(ring_, rows_, other.cols_);
  // Column-indexed sparse product: out.col(j) = sum_k B(k,j) * A.col(k).
  std::vector<std::vector<std::pair<int, RingElement>>> lhs_cols(cols_);
  for (const auto& [ij, a] : entries_)
    lhs_cols[ij.second].emplace_back(ij.first, a);
  std::vector<std::vector<std::pair<int, RingElement>>> rhs_cols(other.cols_);
  for (const auto& [ij, b] : other.entries_)
    rhs_cols[ij.second].emplace_back(ij.first, b);
  for (int j = 0; j < other.cols_; ++j) {
    std::map<int, RingElement> acc;
    for (const auto& [k, b] : rhs_cols[j]) {
      for (const auto& [i, a] : lhs_cols[k]) {
        RingElement prod = ring_.mul(a, b);
        auto [slot, inserted] = acc.try_emplace(i, prod);
        if (!inserted) slot->second = ring_.add(slot->second, prod);
      }
    }
    for (const auto& [i, v] : acc)
      if (!ring_.is_zero(v)) out.entries_[{i, j}] = v;
  }
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("Matrix::apply: shape mismatch");
  Vec out = zero_vec(ring_, rows_);
  for (const auto& [ij, a] : entries_) {
    auto [i, j] = ij;
    out[i] = ring_.add(out[i], ring_.mul(a, x[j]));
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (const auto& [ij, v] : entries_) out.entries_[{ij.second, ij.first}] = v;
  return out;
}

Matrix Matrix::hstack(const Matrix& other) const {
  if (rows_ != other.rows_)
    throw std::invalid_argument("Matrix::hstack: row mismatch");
  if (!(ring_ == other.ring_))
    throw std::invalid_argument("Matrix::hstack: ring mismatch");
  Matrix out(ring_, rows_, cols_ + other.cols_);
  out.entries_ = entries_;
  for (const auto& [ij, v] : other.entries_)
    out.entries_[{ij.first, ij.second + cols_}] = v;
  return out;
}

Vec Matrix::column(int j) const {
  Vec out = zero_vec(ring_, rows_);
  for (int i = 0; i < rows_; ++i) out[i] = get(i, j);
  return out;
}

void Matrix::set_column(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("Matrix::set_column: shape mismatch");
  for (int i = 0; i < rows_; ++i) set(i, j, v[i]);
}

Vec zero_vec(const GroundRing& ring, int n) {
  return Vec(static_cast<std::size_t>(n), ring.zero());
}

Vec add_vec(const GroundRing& ring, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add_vec: size");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

Vec sub_vec(const GroundRing& ring, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub_vec: size");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
  return out;
}

Vec scale_vec(const GroundRing& ring, const RingElement& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(c, a[i]);
  return out;
}

bool is_zero_vec(const GroundRing& ring, const Vec& a) {
  for (const auto& v : a)
    if (!ring.is_zero(v)) return false;
  return true;
}

}  // namespace hhsq
