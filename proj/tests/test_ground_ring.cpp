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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhsq/ground_ring.hpp"

using namespace hhsq;

TEST_CASE("factories and names") {
  CHECK(GroundRing::integers().name() == "Z");
  CHECK(GroundRing::rationals().name() == "Q");
  CHECK(GroundRing::prime_field(7).name() == "F7");
  CHECK(GroundRing::residue(6).name() == "Z/6");
  CHECK(GroundRing::integers().kind() == RingKind::Integers);
  CHECK(GroundRing::prime_field(2).is_field());
  CHECK_FALSE(GroundRing::residue(4).is_field());
  CHECK_FALSE(GroundRing::integers().is_field());
  CHECK_THROWS_AS(GroundRing::prime_field(4), std::invalid_argument);
  CHECK_THROWS_AS(GroundRing::prime_field(1), std::invalid_argument);
  CHECK_THROWS_AS(GroundRing::residue(1), std::invalid_argument);
  CHECK(GroundRing::residue(2).modulus() == 2);
}

TEST_CASE("ring parsing") {
  CHECK(parse_ring("Z") == GroundRing::integers());
  CHECK(parse_ring("Q") == GroundRing::rationals());
  CHECK(parse_ring("F2") == GroundRing::prime_field(2));
  CHECK(parse_ring("F101") == GroundRing::prime_field(101));
  CHECK(parse_ring("Z/4") == GroundRing::residue(4));
  CHECK(parse_ring("Z/360") == GroundRing::residue(360));

  CHECK_THROWS_AS(parse_ring(""), RingParseError);
  CHECK_THROWS_AS(parse_ring("GF2"), RingParseError);
  CHECK_THROWS_AS(parse_ring("F4"), RingParseError);   // not prime
  CHECK_THROWS_AS(parse_ring("F02"), RingParseError);  // leading zero
  CHECK_THROWS_AS(parse_ring("Z/1"), RingParseError);
  CHECK_THROWS_AS(parse_ring("Z/"), RingParseError);
  CHECK_THROWS_AS(parse_ring("Z/08"), RingParseError);
  CHECK_THROWS_AS(parse_ring("Q2"), RingParseError);
  CHECK_THROWS_AS(parse_ring("Z2"), RingParseError);
  CHECK_THROWS_AS(parse_ring(" Z"), RingParseError);

  try {
    parse_ring("Z/x");
  } catch (const RingParseError& e) {
    CHECK(e.pos == 2);
  }
}

TEST_CASE("canonical arithmetic over Q") {
  GroundRing q = GroundRing::rationals();
  RingElement half = q.from_fraction(1, 2);
  RingElement third = q.from_fraction(2, 6);  // reduces to 1/3
  CHECK(third.num == 1);
  CHECK(third.den == 3);
  RingElement sum = q.add(half, third);
  CHECK(sum.num == 5);
  CHECK(sum.den == 6);
  RingElement neg = q.from_fraction(3, -6);
  CHECK(neg.num == -1);
  CHECK(neg.den == 2);
  CHECK(q.mul(half, q.from_int(2)) == q.one());
  CHECK(q.is_unit(half));
  CHECK(q.inverse(half) == q.from_int(2));
  CHECK_THROWS_AS(q.from_fraction(1, 0), std::invalid_argument);
  CHECK(q.str(half) == "1/2");
}

TEST_CASE("canonical arithmetic over modular rings") {
  GroundRing f5 = GroundRing::prime_field(5);
  CHECK(f5.from_int(-1).num == 4);
  CHECK(f5.add(f5.from_int(3), f5.from_int(4)).num == 2);
  CHECK(f5.inverse(f5.from_int(2)).num == 3);

  GroundRing z6 = GroundRing::residue(6);
  CHECK(z6.from_int(10).num == 4);
  CHECK(z6.mul(z6.from_int(2), z6.from_int(3)).num == 0);
  CHECK(z6.is_unit(z6.from_int(5)));
  CHECK_FALSE(z6.is_unit(z6.from_int(2)));
  CHECK(z6.inverse(z6.from_int(5)).num == 5);
}

TEST_CASE("exact division") {
  GroundRing z = GroundRing::integers();
  CHECK(z.divide(z.from_int(6), z.from_int(3)).value() == z.from_int(2));
  CHECK_FALSE(z.divide(z.from_int(5), z.from_int(3)).has_value());
  CHECK_FALSE(z.divide(z.from_int(1), z.from_int(0)).has_value());
  CHECK(z.divide(z.from_int(0), z.from_int(0)).has_value());

  // Over Z/n divisibility is exactly solvability of b*x = a, checked here
  // exhaustively against brute force.
  for (long long n : {4LL, 6LL, 12LL}) {
    GroundRing zn = GroundRing::residue(n);
    for (long long a = 0; a < n; ++a) {
      for (long long b = 0; b < n; ++b) {
        auto got = zn.divide(zn.from_int(a), zn.from_int(b));
        bool solvable = false;
        for (long long c = 0; c < n; ++c)
          if ((c * b) % n == a) solvable = true;
        REQUIRE(got.has_value() == solvable);
        if (got) REQUIRE(zn.mul(*got, zn.from_int(b)) == zn.from_int(a));
      }
    }
  }
}

TEST_CASE("canonical associates") {
  GroundRing z = GroundRing::integers();
  CHECK(z.canonical_associate(z.from_int(-7)) == z.from_int(7));
  CHECK(z.associate_unit(z.from_int(-7)) == z.from_int(-1));

  GroundRing q = GroundRing::rationals();
  CHECK(q.canonical_associate(q.from_fraction(-3, 7)) == q.one());

  for (long long n : {4LL, 6LL, 9LL, 12LL}) {
    GroundRing zn = GroundRing::residue(n);
    for (long long a = 0; a < n; ++a) {
      RingElement e = zn.from_int(a);
      RingElement assoc = zn.canonical_associate(e);
      RingElement u = zn.associate_unit(e);
      REQUIRE(zn.is_unit(u));
      REQUIRE(zn.mul(u, e) == assoc);
      if (a != 0) REQUIRE(n % assoc.num == 0);  // a divisor of the modulus
    }
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(561));   // Carmichael
  CHECK_FALSE(is_prime(41041)); // Carmichael
  CHECK(is_prime(104729));
  CHECK(is_prime(Int("1000000007")));
  // 10^18 + 1 = 101 * 9901 * ... via the a^9 + 1 factorization.
  CHECK_FALSE(is_prime(Int("1000000000000000001")));
  CHECK(is_prime((Int(1) << 61) - 1));
  CHECK_FALSE(is_prime((Int(1) << 67) - 1));
}

TEST_CASE("modular inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(5, 6) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 6), std::domain_error);
}

TEST_CASE("module descriptors") {
  ModuleDescriptor zero;
  CHECK(zero.is_zero());
  ModuleDescriptor m(2, {Int(2), Int(4)});
  CHECK(m.free_rank == 2);
  CHECK_FALSE(m.is_zero());
  CHECK_THROWS_AS(ModuleDescriptor(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(ModuleDescriptor(0, {Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(ModuleDescriptor(0, {Int(4), Int(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModuleDescriptor(0, {Int(2), Int(3)}),
                  std::invalid_argument);
  CHECK(ModuleDescriptor(0, {Int(2), Int(6)}) ==
        ModuleDescriptor(0, {Int(2), Int(6)}));
}

TEST_CASE("two-torsion and mod-two quotient per ring") {
  auto z = GroundRing::integers();
  auto q = GroundRing::rationals();
  auto f2 = GroundRing::prime_field(2);
  auto f3 = GroundRing::prime_field(3);
  auto z2 = GroundRing::residue(2);
  auto z4 = GroundRing::residue(4);
  auto z6 = GroundRing::residue(6);
  auto z9 = GroundRing::residue(9);

  CHECK(two_torsion(z).module.is_zero());
  CHECK(two_torsion(q).module.is_zero());
  CHECK(two_torsion(f3).module.is_zero());
  CHECK(two_torsion(z9).module.is_zero());
  CHECK(two_torsion(f2).module == ModuleDescriptor(1, {}));
  CHECK(two_torsion(z2).module == ModuleDescriptor(1, {}));
  CHECK(two_torsion(z4).module == ModuleDescriptor(0, {Int(2)}));
  CHECK(two_torsion(z6).module == ModuleDescriptor(0, {Int(2)}));
  CHECK(two_torsion(z4).generator.value() == z4.from_int(2));
  CHECK(two_torsion(z6).generator.value() == z6.from_int(3));

  CHECK(mod_two_quotient(z).module == ModuleDescriptor(0, {Int(2)}));
  CHECK(mod_two_quotient(q).module.is_zero());
  CHECK(mod_two_quotient(f3).module.is_zero());
  CHECK(mod_two_quotient(z9).module.is_zero());
  CHECK(mod_two_quotient(f2).module == ModuleDescriptor(1, {}));
  CHECK(mod_two_quotient(z2).module == ModuleDescriptor(1, {}));
  CHECK(mod_two_quotient(z4).module == ModuleDescriptor(0, {Int(2)}));
  CHECK(mod_two_quotient(z6).module == ModuleDescriptor(0, {Int(2)}));

  // Witness sanity: generators are killed by 2 and nonzero where claimed.
  for (const auto& ring : {f2, z2, z4, z6}) {
    auto tors = two_torsion(ring);
    REQUIRE(tors.generator.has_value());
    CHECK_FALSE(ring.is_zero(*tors.generator));
    CHECK(ring.is_zero(ring.add(*tors.generator, *tors.generator)));
  }
}
