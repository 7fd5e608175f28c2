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

#include "hhsq/ground_ring.hpp"

#include <boost/multiprecision/integer.hpp>

#include <array>
#include <cctype>

namespace hhsq {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

Int mod_pow(Int base, Int exp, const Int& m) {
  return boost::multiprecision::powm(base, exp, m);
}

// Strong pseudoprime test for one base.
bool strong_probable_prime(const Int& n, const Int& base) {
  if (base % n == 0) return true;
  Int d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  Int x = mod_pow(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  // Jaeschke / Sorenson-Webster base set, exact for n < 3.317e24.
  static const Int kExactBound("3317044064679887385961981");
  if (p < kExactBound) {
    for (int b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      if (!strong_probable_prime(p, b)) return false;
    }
    return true;
  }
  Int d = 41;
  while (d * d <= p) {
    if (p % d == 0) return false;
    d += 2;
  }
  return true;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: element is not a unit");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

GroundRing GroundRing::integers() { return GroundRing(RingKind::Integers, 0); }

GroundRing GroundRing::rationals() {
  return GroundRing(RingKind::Rationals, 0);
}

GroundRing GroundRing::prime_field(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_field: p is not prime");
  return GroundRing(RingKind::PrimeField, p);
}

GroundRing GroundRing::residue(const Int& n) {
  if (n < 2) throw std::invalid_argument("residue: modulus must be >= 2");
  return GroundRing(RingKind::Residue, n);
}

const Int& GroundRing::modulus() const {
  if (kind_ != RingKind::PrimeField && kind_ != RingKind::Residue)
    throw std::logic_error("modulus: ring has no modulus");
  return mod_;
}

std::string GroundRing::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + mod_.str();
    case RingKind::Residue:
      return "Z/" + mod_.str();
  }
  return {};
}

RingElement GroundRing::reduce(Int v) const {
  v %= mod_;
  if (v < 0) v += mod_;
  return RingElement{std::move(v), 1};
}

RingElement GroundRing::from_int(long long v) const { return from_int(Int(v)); }

RingElement GroundRing::from_int(const Int& v) const {
  if (kind_ == RingKind::PrimeField || kind_ == RingKind::Residue)
    return reduce(v);
  return RingElement{v, 1};
}

RingElement GroundRing::from_fraction(const Int& num, const Int& den) const {
  if (kind_ != RingKind::Rationals)
    throw std::invalid_argument("from_fraction: ring is not Q");
  if (den == 0) throw std::invalid_argument("from_fraction: zero denominator");
  Int n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = int_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return RingElement{n, d};
}

RingElement GroundRing::add(const RingElement& a, const RingElement& b) const {
  switch (kind_) {
    case RingKind::Integers:
      return RingElement{a.num + b.num, 1};
    case RingKind::Rationals:
      return from_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    default:
      return reduce(a.num + b.num);
  }
}

RingElement GroundRing::sub(const RingElement& a, const RingElement& b) const {
  return add(a, neg(b));
}

RingElement GroundRing::mul(const RingElement& a, const RingElement& b) const {
  switch (kind_) {
    case RingKind::Integers:
      return RingElement{a.num * b.num, 1};
    case RingKind::Rationals:
      return from_fraction(a.num * b.num, a.den * b.den);
    default:
      return reduce(a.num * b.num);
  }
}

RingElement GroundRing::neg(const RingElement& a) const {
  switch (kind_) {
    case RingKind::Integers:
      return RingElement{-a.num, 1};
    case RingKind::Rationals:
      return RingElement{-a.num, a.den};
    default:
      return reduce(-a.num);
  }
}

bool GroundRing::is_unit(const RingElement& a) const {
  switch (kind_) {
    case RingKind::Integers:
      return a.num == 1 || a.num == -1;
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return a.num != 0;
    case RingKind::Residue:
      return int_gcd(a.num, mod_) == 1;
  }
  return false;
}

RingElement GroundRing::inverse(const RingElement& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse: element is not a unit");
  switch (kind_) {
    case RingKind::Integers:
      return a;
    case RingKind::Rationals:
      return from_fraction(a.den, a.num);
    default:
      return RingElement{mod_inverse(a.num, mod_), 1};
  }
}

std::optional<RingElement> GroundRing::divide(const RingElement& a,
                                              const RingElement& b) const {
  if (is_zero(b)) {
    if (is_zero(a)) return zero();
    return std::nullopt;
  }
  switch (kind_) {
    case RingKind::Integers: {
      if (a.num % b.num != 0) return std::nullopt;
      return RingElement{a.num / b.num, 1};
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return mul(a, inverse(b));
    case RingKind::Residue: {
      Int g = int_gcd(b.num, mod_);
      if (a.num % g != 0) return std::nullopt;
      Int m = mod_ / g;
      Int c = ((a.num / g) % m) * mod_inverse(b.num / g, m) % m;
      return reduce(c);
    }
  }
  return std::nullopt;
}

RingElement GroundRing::canonical_associate(const RingElement& a) const {
  switch (kind_) {
    case RingKind::Integers:
      return RingElement{a.num < 0 ? -a.num : a.num, 1};
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return a.num == 0 ? zero() : one();
    case RingKind::Residue:
      return a.num == 0 ? zero() : RingElement{int_gcd(a.num, mod_), 1};
  }
  return a;
}

RingElement GroundRing::associate_unit(const RingElement& a) const {
  switch (kind_) {
    case RingKind::Integers:
      return from_int(a.num < 0 ? -1 : 1);
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return a.num == 0 ? one() : inverse(a);
    case RingKind::Residue: {
      if (a.num == 0) return one();
      Int g = int_gcd(a.num, mod_);
      Int m = mod_ / g;
      Int u0 = mod_inverse((a.num / g) % m, m);
      // Lift u0 to a unit mod n; some u0 + t*(n/g) with 0 <= t < g works.
      for (Int t = 0; t < g; ++t) {
        Int u = (u0 + t * m) % mod_;
        if (int_gcd(u, mod_) == 1) return RingElement{u, 1};
      }
      throw std::logic_error("associate_unit: no unit lift found");
    }
  }
  return one();
}

std::string GroundRing::str(const RingElement& a) const {
  if (kind_ == RingKind::Rationals && a.den != 1)
    return a.num.str() + "/" + a.den.str();
  return a.num.str();
}

GroundRing parse_ring(const std::string& text) {
  auto parse_number = [&](std::size_t pos) -> Int {
    if (pos >= text.size())
      throw RingParseError("ring string '" + text + "': missing number", pos);
    for (std::size_t i = pos; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw RingParseError(
            "ring string '" + text + "': unexpected character", i);
    if (text[pos] == '0' && text.size() > pos + 1)
      throw RingParseError("ring string '" + text + "': leading zero", pos);
    return Int(text.substr(pos));
  };
  if (text == "Z") return GroundRing::integers();
  if (text == "Q") return GroundRing::rationals();
  if (!text.empty() && text[0] == 'F') {
    Int p = parse_number(1);
    if (!is_prime(p))
      throw RingParseError(
          "ring string '" + text + "': " + p.str() + " is not prime", 1);
    return GroundRing::prime_field(p);
  }
  if (text.size() >= 2 && text[0] == 'Z' && text[1] == '/') {
    Int n = parse_number(2);
    if (n < 2)
      throw RingParseError("ring string '" + text + "': modulus must be >= 2",
                           2);
    return GroundRing::residue(n);
  }
  throw RingParseError("ring string '" + text +
                           "': expected Z, Q, F<p> or Z/<n>",
                       0);
}

ModuleDescriptor::ModuleDescriptor(long long free, std::vector<Int> tors)
    : free_rank(free), torsion(std::move(tors)) {
  if (free_rank < 0)
    throw std::invalid_argument("ModuleDescriptor: negative free rank");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] <= 1)
      throw std::invalid_argument("ModuleDescriptor: torsion entry <= 1");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw std::invalid_argument("ModuleDescriptor: broken divisor chain");
  }
}

std::string ModuleDescriptor::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (free_rank > 0) out += "free^" + std::to_string(free_rank);
  for (const Int& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "cyclic(" + d.str() + ")";
  }
  return out;
}

CyclicSummand two_torsion(const GroundRing& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return {ModuleDescriptor{}, std::nullopt};
    case RingKind::PrimeField:
      if (ring.modulus() == 2)
        return {ModuleDescriptor(1, {}), ring.one()};
      return {ModuleDescriptor{}, std::nullopt};
    case RingKind::Residue: {
      const Int& n = ring.modulus();
      if (n % 2 != 0) return {ModuleDescriptor{}, std::nullopt};
      if (n == 2) return {ModuleDescriptor(1, {}), ring.one()};
      return {ModuleDescriptor(0, {Int(2)}), ring.from_int(n / 2)};
    }
  }
  return {ModuleDescriptor{}, std::nullopt};
}

CyclicSummand mod_two_quotient(const GroundRing& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return {ModuleDescriptor(0, {Int(2)}), ring.one()};
    case RingKind::Rationals:
      return {ModuleDescriptor{}, std::nullopt};
    case RingKind::PrimeField:
      if (ring.modulus() == 2)
        return {ModuleDescriptor(1, {}), ring.one()};
      return {ModuleDescriptor{}, std::nullopt};
    case RingKind::Residue: {
      const Int& n = ring.modulus();
      if (n % 2 != 0) return {ModuleDescriptor{}, std::nullopt};
      if (n == 2) return {ModuleDescriptor(1, {}), ring.one()};
      return {ModuleDescriptor(0, {Int(2)}), ring.one()};
    }
  }
  return {ModuleDescriptor{}, std::nullopt};
}

}  // namespace hhsq
