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

#include "checks.hpp"
#include "hhsq/normal_forms.hpp"

using namespace hhsq;

namespace {
const GroundRing kZ = GroundRing::integers();
const GroundRing kQ = GroundRing::rationals();

std::vector<long long> factor_values(const SmithDecomposition& snf) {
  std::vector<long long> out;
  for (const RingElement& d : snf.invariant_factors)
    out.push_back(d.num.convert_to<long long>());
  return out;
}
}  // namespace

TEST_CASE("diagonal form of known integer matrices") {
  SmithDecomposition a =
      smith_normal_form(Matrix::from_rows(kZ, {{2, 4}, {6, 8}}));
  CHECK(a.rank == 2);
  CHECK(factor_values(a) == std::vector<long long>{2, 4});

  SmithDecomposition b =
      smith_normal_form(Matrix::from_rows(kZ, {{1, 2}, {3, 4}}));
  CHECK(factor_values(b) == std::vector<long long>{1, 2});

  SmithDecomposition c = smith_normal_form(Matrix(kZ, 3, 2));
  CHECK(c.rank == 0);
  CHECK(c.invariant_factors.empty());

  SmithDecomposition d =
      smith_normal_form(Matrix::from_rows(kZ, {{2, 4, 6}}));
  CHECK(factor_values(d) == std::vector<long long>{2});
}

TEST_CASE("transform accumulation is optional") {
  Matrix m = Matrix::from_rows(kZ, {{2, 4}, {6, 8}});
  SmithDecomposition full = smith_normal_form(m);
  SmithDecomposition bare =
      smith_normal_form(m, SmithOptions{false, false, false, false});
  CHECK(bare.S == full.S);
  CHECK(bare.rank == full.rank);
  CHECK(bare.U.rows() == 0);
  CHECK(bare.Vinv.rows() == 0);
  CHECK_THROWS_AS(solve_with(bare, zero_vec(kZ, 2)), std::invalid_argument);
}

TEST_CASE("decomposition postconditions, randomized") {
  testing::Rng rng(550321u);
  for (const auto& ring :
       {kZ, kQ, GroundRing::prime_field(2), GroundRing::prime_field(5),
        GroundRing::residue(4), GroundRing::residue(6),
        GroundRing::residue(12)}) {
    for (int trial = 0; trial < 22; ++trial) {
      int n = testing::rand_int(rng, 1, 5);
      int m = testing::rand_int(rng, 1, 5);
      Matrix mat = testing::rand_matrix(rng, ring, n, m, 9);
      CHECK(testing::smith_postconditions_hold(mat));
    }
  }
}

TEST_CASE("row-canonical form over Z/n") {
  const GroundRing z6 = GroundRing::residue(6);
  CHECK_THROWS_AS(howell_form(Matrix(kZ, 2, 2)), std::domain_error);

  // Rows 2 and 3 generate the unit ideal of Z/6, so the canonical form is a
  // single row holding 1.
  Matrix h = howell_form(Matrix::from_rows(z6, {{2}, {3}}));
  CHECK(h == Matrix::from_rows(z6, {{1}}));

  testing::Rng rng(660177u);
  for (long long n : {4, 6, 8, 12}) {
    const GroundRing ring = GroundRing::residue(n);
    for (int trial = 0; trial < 25; ++trial) {
      int rows = testing::rand_int(rng, 1, 4);
      int cols = testing::rand_int(rng, 1, 4);
      Matrix mat = testing::rand_matrix(rng, ring, rows, cols, n - 1);
      CHECK(testing::howell_postconditions_hold(mat));
    }
  }
}

TEST_CASE("kernel columns annihilate and span") {
  // Over Z the kernel of (2 4) is the rank-one lattice through (2, -1).
  Matrix m = Matrix::from_rows(kZ, {{2, 4}});
  Matrix k = kernel(m);
  CHECK(k.cols() == 1);
  CHECK(m.mul(k).is_zero());
  Vec gen{kZ.from_int(2), kZ.from_int(-1)};
  CHECK(solve(k, gen).has_value());

  Matrix mq = Matrix::from_rows(kQ, {{2, 4}});
  CHECK(kernel(mq).cols() == 1);
  CHECK(mq.mul(kernel(mq)).is_zero());
}

TEST_CASE("kernel is exhaustive over small residue rings") {
  testing::Rng rng(31337u);
  for (long long n : {4, 6}) {
    const GroundRing ring = GroundRing::residue(n);
    for (int trial = 0; trial < 12; ++trial) {
      int rows = testing::rand_int(rng, 1, 2);
      int cols = testing::rand_int(rng, 1, 3);
      Matrix m = testing::rand_matrix(rng, ring, rows, cols, n - 1);
      Matrix k = kernel(m);
      CHECK(m.mul(k).is_zero());
      // Walk every vector of (Z/n)^cols and confirm the annihilated ones lie
      // in the span of the kernel columns.
      long long total = 1;
      for (int j = 0; j < cols; ++j) total *= n;
      for (long long code = 0; code < total; ++code) {
        Vec v = zero_vec(ring, cols);
        long long rest = code;
        for (int j = 0; j < cols; ++j) {
          v[j] = ring.from_int(rest % n);
          rest /= n;
        }
        if (is_zero_vec(ring, m.apply(v))) CHECK(solve(k, v).has_value());
      }
    }
  }
}

TEST_CASE("linear solve finds witnesses and rejects the unsolvable") {
  Matrix two_z = Matrix::from_rows(kZ, {{2}});
  CHECK_FALSE(solve(two_z, {kZ.one()}).has_value());
  auto x = solve(two_z, {kZ.from_int(4)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == kZ.from_int(2));

  const GroundRing z4 = GroundRing::residue(4);
  Matrix two_mod = Matrix::from_rows(z4, {{2}});
  CHECK_FALSE(solve(two_mod, {z4.one()}).has_value());
  auto y = solve(two_mod, {z4.from_int(2)});
  REQUIRE(y.has_value());
  CHECK(two_mod.apply(*y)[0] == z4.from_int(2));

  Matrix two_q = Matrix::from_rows(kQ, {{2}});
  auto half = solve(two_q, {kQ.one()});
  REQUIRE(half.has_value());
  CHECK((*half)[0] == kQ.from_fraction(1, 2));
}

TEST_CASE("solve and solve_with agree on shared decompositions") {
  testing::Rng rng(411019u);
  for (const auto& ring : {kZ, kQ, GroundRing::prime_field(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      int n = testing::rand_int(rng, 1, 4);
      int m = testing::rand_int(rng, 1, 4);
      Matrix mat = testing::rand_matrix(rng, ring, n, m, 6);
      SmithDecomposition snf = smith_normal_form(mat);
      for (int rhs = 0; rhs < 3; ++rhs) {
        Vec v(static_cast<std::size_t>(n), ring.zero());
        for (auto& entry : v)
          entry = ring.from_int(testing::rand_int(rng, -6, 6));
        auto direct = solve(mat, v);
        auto shared = solve_with(snf, v);
        CHECK(direct.has_value() == shared.has_value());
        if (shared) CHECK(mat.apply(*shared) == v);
        if (direct) CHECK(mat.apply(*direct) == v);
      }
    }
  }
}

TEST_CASE("column span comparison") {
  Matrix id = Matrix::identity(kZ, 2);
  Matrix swapped = Matrix::from_rows(kZ, {{0, 1}, {1, 0}});
  CHECK(same_column_span(id, swapped));

  Matrix doubled = Matrix::from_rows(kZ, {{2}, {0}});
  Matrix unit = Matrix::from_rows(kZ, {{1}, {0}});
  CHECK_FALSE(same_column_span(doubled, unit));
  CHECK(same_column_span(Matrix::from_rows(kQ, {{2}, {0}}),
                         Matrix::from_rows(kQ, {{1}, {0}})));

  // A zero column spans the same (trivial) space as no columns at all.
  CHECK(same_column_span(Matrix(kZ, 2, 1), Matrix(kZ, 2, 0)));
  CHECK_THROWS_AS(same_column_span(id, Matrix(kZ, 3, 1)),
                  std::invalid_argument);
}

TEST_CASE("determinants") {
  CHECK(determinant(Matrix::identity(kZ, 3)) == kZ.one());
  CHECK(determinant(Matrix::from_rows(kZ, {{1, 2}, {3, 4}})) ==
        kZ.from_int(-2));
  CHECK(determinant(Matrix::from_rows(kZ, {{0, 1}, {1, 0}})) ==
        kZ.from_int(-1));
  CHECK(determinant(Matrix::from_rows(kZ, {{1, 2}, {2, 4}})) == kZ.zero());
  CHECK(determinant(Matrix(kZ, 0, 0)) == kZ.one());
  CHECK(determinant(Matrix::from_rows(GroundRing::residue(6), {{1, 2}, {3, 4}})) ==
        GroundRing::residue(6).from_int(4));
  CHECK(determinant(Matrix::from_rows(kQ, {{1, 2}, {3, 4}})) ==
        kQ.from_int(-2));
  CHECK_THROWS_AS(determinant(Matrix(kZ, 2, 3)), std::invalid_argument);

  testing::Rng rng(271828u);
  for (const auto& ring :
       {kZ, kQ, GroundRing::prime_field(5), GroundRing::residue(6)}) {
    for (int trial = 0; trial < 30; ++trial) {
      int n = testing::rand_int(rng, 1, 4);
      Matrix a = testing::rand_matrix(rng, ring, n, n, 6);
      Matrix b = testing::rand_matrix(rng, ring, n, n, 6);
      CHECK(determinant(a.mul(b)) == ring.mul(determinant(a), determinant(b)));
    }
  }
}

TEST_CASE("cokernel descriptors") {
  auto diag = [&](const GroundRing& ring, std::vector<long long> d, int rows,
                  int cols) {
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i)
      m.set(static_cast<int>(i), static_cast<int>(i), ring.from_int(d[i]));
    return m;
  };
  CHECK(cokernel_descriptor(diag(kZ, {2, 3}, 2, 2)) ==
        ModuleDescriptor(0, {6}));
  CHECK(cokernel_descriptor(diag(kZ, {2, 2}, 2, 2)) ==
        ModuleDescriptor(0, {2, 2}));
  CHECK(cokernel_descriptor(diag(kZ, {1}, 1, 1)) == ModuleDescriptor(0, {}));
  CHECK(cokernel_descriptor(Matrix(kZ, 3, 2)) == ModuleDescriptor(3, {}));
  CHECK(cokernel_descriptor(diag(GroundRing::residue(4), {2}, 1, 1)) ==
        ModuleDescriptor(0, {2}));
  CHECK(cokernel_descriptor(diag(GroundRing::prime_field(5), {2}, 2, 1)) ==
        ModuleDescriptor(1, {}));
}
