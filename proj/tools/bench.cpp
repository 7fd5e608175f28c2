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

// Wall-clock comparison of the serial reference path against the OpenMP
// path on the workloads that dominate real runs. The two paths must produce
// identical results; this binary also asserts that while timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hhsq/verify.hpp"

using namespace hhsq;

namespace {

double seconds(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void row(const char* name, double serial, double openmp) {
  std::printf("%-42s %10.3fs %10.3fs %8.2fx\n", name, serial, openmp,
              openmp > 0 ? serial / openmp : 0.0);
}

}  // namespace

int main() {
  const GroundRing kZ = GroundRing::integers();
  std::printf("%-42s %11s %11s %9s\n", "workload", "serial", "openmp",
              "speedup");

  {
    std::optional<FullComplex> a, b;
    double ts = seconds([&] {
      a = build_full_complex(3, kZ, 6, 100000, ExecutionMode::Serial);
    });
    double tp = seconds([&] {
      b = build_full_complex(3, kZ, 6, 100000, ExecutionMode::OpenMp);
    });
    for (int q = 0; q <= 7; ++q)
      if (!(a->complex.diff(q) == b->complex.diff(q)))
        throw std::logic_error("assembly paths disagree");
    row("assemble bar complex, r=3 through q=6", ts, tp);
  }

  {
    AggregateHomology a, b;
    double ts = seconds(
        [&] { a = aggregate_homology(3, kZ, 5, ExecutionMode::Serial); });
    double tp = seconds(
        [&] { b = aggregate_homology(3, kZ, 5, ExecutionMode::OpenMp); });
    if (!(a.module == b.module))
      throw std::logic_error("aggregation paths disagree");
    row("aggregate slice homology, r=3 at q=5", ts, tp);
  }

  {
    std::vector<OracleCheck> a, b;
    double ts = seconds([&] {
      a = oracle_compare(2, kZ, 4, 20000, ExecutionMode::Serial);
    });
    double tp = seconds([&] {
      b = oracle_compare(2, kZ, 4, 20000, ExecutionMode::OpenMp);
    });
    for (const auto& c : a)
      if (!c.match) throw std::logic_error("oracle mismatch (serial)");
    for (const auto& c : b)
      if (!c.match) throw std::logic_error("oracle mismatch (openmp)");
    row("brute force vs slices, r=2 through q=4", ts, tp);
  }

  {
    SweepResult a, b;
    double ts = seconds(
        [&] { a = sweep_words(3, 5, kZ, ExecutionMode::Serial); });
    double tp = seconds(
        [&] { b = sweep_words(3, 5, kZ, ExecutionMode::OpenMp); });
    if (a.failures != 0 || b.failures != 0)
      throw std::logic_error("audit failures during benchmark");
    row("necklace audit, r=3 words through m=5", ts, tp);
  }

  return 0;
}
