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
#include <utility>
#include <vector>

#include "hhsq/ground_ring.hpp"

namespace hhsq {

using Vec = std::vector<RingElement>;

// Matrix over a ground ring; only nonzero entries are stored. Zero row or
// column counts are legal (empty chain groups produce them).
class Matrix {
 public:
  Matrix(GroundRing ring, int rows, int cols);
  static Matrix identity(const GroundRing& ring, int n);
  // Convenience for literals in tests and builders.
  static Matrix from_rows(const GroundRing& ring,
                          const std::vector<std::vector<long long>>& rows);

  const GroundRing& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, RingElement>& entries() const {
    return entries_;
  }

  RingElement get(int i, int j) const;
  void set(int i, int j, const RingElement& v);

  Matrix mul(const Matrix& other) const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  Matrix transpose() const;
  Matrix hstack(const Matrix& other) const;  // [this | other]
  Vec column(int j) const;
  void set_column(int j, const Vec& v);

  bool is_zero() const { return entries_.empty(); }
  bool operator==(const Matrix&) const = default;

 private:
  GroundRing ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, RingElement> entries_;
};

Vec zero_vec(const GroundRing& ring, int n);
Vec add_vec(const GroundRing& ring, const Vec& a, const Vec& b);
Vec sub_vec(const GroundRing& ring, const Vec& a, const Vec& b);
Vec scale_vec(const GroundRing& ring, const RingElement& c, const Vec& a);
bool is_zero_vec(const GroundRing& ring, const Vec& a);

}  // namespace hhsq
