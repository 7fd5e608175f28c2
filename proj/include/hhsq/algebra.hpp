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
#include <string>
#include <vector>

#include "hhsq/ground_ring.hpp"
#include "hhsq/words.hpp"

namespace hhsq {

// The coefficient algebra has basis {1, x_1, ..., x_r} with every product of
// two generators equal to zero. A factor is coded 0 for the unit and i for
// x_i; all structure maps below stay inside this basis up to sign.

// Product of two basis factors: -1 encodes the zero element.
inline int mul_factor(int a, int b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return -1;
}

// Basis tensor a_0 (x) ... (x) a_n of degree n, stored as factor codes.
struct Simplex {
  std::vector<int> factors;

  int degree() const { return static_cast<int>(factors.size()) - 1; }
  bool operator==(const Simplex&) const = default;
  bool operator<(const Simplex& o) const { return factors < o.factors; }
};

Simplex make_simplex(std::vector<int> factors, int r);

// "1(x)x1(x)x2" style rendering with a real tensor sign.
std::string simplex_str(const Simplex& s);

// Formal combination of same-degree simplices with nonzero coefficients.
class Chain {
 public:
  Chain(GroundRing ring, int degree) : ring_(std::move(ring)), degree_(degree) {}

  const GroundRing& ring() const { return ring_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Simplex, RingElement>& terms() const { return terms_; }

  // Adds c * s, erasing the term when the sum cancels.
  void add_term(const Simplex& s, const RingElement& c);
  Chain plus(const Chain& other) const;
  Chain scaled(const RingElement& c) const;
  Chain negated() const;

  bool operator==(const Chain&) const = default;

  std::string str() const;

 private:
  GroundRing ring_;
  int degree_ = 0;
  std::map<Simplex, RingElement> terms_;
};

Chain zero_chain(const GroundRing& ring, int degree);
Chain chain_of(const GroundRing& ring, const Simplex& s);

// Face d_i: multiplies slots i and i+1; the last face wraps a_n in front.
// Result is a single simplex or zero (when the product of two generators
// appears). 0 <= i <= degree, degree >= 1.
Chain face(const GroundRing& ring, const Simplex& s, int i);
// Degeneracy s_i: inserts the unit after slot i. 0 <= i <= degree.
Simplex degeneracy(const Simplex& s, int i);
// Cyclic operator t_n: moves the last factor to the front, no sign.
Simplex cyclic(const Simplex& s);

Chain face(const Chain& c, int i);
Chain degeneracy(const Chain& c, int i);
Chain cyclic(const Chain& c);

// Alternating sum of all faces.
Chain boundary(const GroundRing& ring, const Simplex& s);
Chain boundary(const Chain& c);

// A simplex is degenerate when an interior slot (anything past slot 0) holds
// the unit.
bool is_degenerate(const Simplex& s);

// Letters of the simplex read from slot 0 upward, skipping units, as a
// rotation orbit. Every structure map above preserves this invariant (or
// kills the simplex), which is what makes the orbit a valid summand label.
CyclicWord summand_of(const Simplex& s);

}  // namespace hhsq
