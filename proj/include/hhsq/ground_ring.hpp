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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhsq {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Rationals, PrimeField, Residue };

// Element of a ground ring, always kept canonical:
//   Integers / PrimeField / Residue: den == 1, residues reduced into [0, n).
//   Rationals: gcd(|num|, den) == 1 and den >= 1.
struct RingElement {
  Int num = 0;
  Int den = 1;
  bool operator==(const RingElement&) const = default;
};

// One of Z, Q, F_p (p prime), Z/n (n >= 2, composite allowed).
// All arithmetic goes through this class so elements stay canonical.
class GroundRing {
 public:
  static GroundRing integers();
  static GroundRing rationals();
  static GroundRing prime_field(const Int& p);  // throws if p is not prime
  static GroundRing residue(const Int& n);      // throws if n < 2

  RingKind kind() const { return kind_; }
  bool is_field() const {
    return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField;
  }
  // p or n; only meaningful for PrimeField / Residue.
  const Int& modulus() const;
  // Canonical ring string: "Z", "Q", "F5", "Z/6".
  std::string name() const;

  RingElement zero() const { return RingElement{}; }
  RingElement one() const { return from_int(1); }
  RingElement from_int(long long v) const;
  RingElement from_int(const Int& v) const;
  // Rationals only; den must be nonzero.
  RingElement from_fraction(const Int& num, const Int& den) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;

  bool is_zero(const RingElement& a) const { return a.num == 0; }
  bool is_unit(const RingElement& a) const;
  RingElement inverse(const RingElement& a) const;  // a must be a unit

  // Exact division: some c with c*b == a, or nullopt when none exists.
  // Over Z/n the solution need not be unique; any valid one is returned.
  std::optional<RingElement> divide(const RingElement& a,
                                    const RingElement& b) const;

  // Canonical associate: |a| over Z, 0/1 over fields, gcd(a, n) over Z/n.
  RingElement canonical_associate(const RingElement& a) const;
  // Unit u with u*a == canonical_associate(a).
  RingElement associate_unit(const RingElement& a) const;

  std::string str(const RingElement& a) const;

  bool operator==(const GroundRing&) const = default;

 private:
  GroundRing(RingKind kind, Int mod) : kind_(kind), mod_(std::move(mod)) {}
  RingElement reduce(Int v) const;  // canonical residue for modular kinds

  RingKind kind_ = RingKind::Integers;
  Int mod_ = 0;
};

struct RingParseError : std::runtime_error {
  RingParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), pos(pos) {}
  std::size_t pos = 0;
};

// Accepts exactly "Z", "Q", "F<p>" with p prime, "Z/<n>" with n >= 2.
GroundRing parse_ring(const std::string& text);

// Deterministic primality test (trial division plus a fixed-base strong
// pseudoprime test whose base set is proven exact below 3.3e24; inputs at or
// above that bound fall back to full trial division).
bool is_prime(const Int& p);

Int mod_inverse(const Int& a, const Int& m);  // throws when gcd(a, m) != 1

// Finitely generated module over the active ring, in invariant-factor form:
// free_rank copies of the ring plus cyclic summands ring/(d_i) with each
// d_i > 1 and d_i | d_{i+1}.
struct ModuleDescriptor {
  long long free_rank = 0;
  std::vector<Int> torsion;

  ModuleDescriptor() = default;
  ModuleDescriptor(long long free, std::vector<Int> tors);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
  bool operator==(const ModuleDescriptor&) const = default;
};

// A cyclic module given with a witness generator when it is nonzero.
struct CyclicSummand {
  ModuleDescriptor module;
  std::optional<RingElement> generator;
};

// Elements killed by 2, i.e. {a : 2a = 0}.
CyclicSummand two_torsion(const GroundRing& ring);
// Quotient by doubles, i.e. ring/2*ring.
CyclicSummand mod_two_quotient(const GroundRing& ring);

}  // namespace hhsq
