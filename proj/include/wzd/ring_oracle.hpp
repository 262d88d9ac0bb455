// Copyright 2026 The wzd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "wzd/graph.hpp"

namespace wzd {

/// Nonzero annihilators of x in Z_n: all t != 0 with t*x = 0 (mod n).
/// These are exactly the nonzero multiples of n/gcd(x,n), so the set has
/// gcd(x,n) - 1 elements.
struct AnnihilatorSet {
  std::int64_t n = 0;
  std::int64_t x = 0;
  std::vector<std::int64_t> elements;  // ascending
};

/// Result of an adjacency query, with the witness pair when adjacent.
struct Adjacency {
  bool adjacent = false;
  std::int64_t witness_w = 0;  // nonzero annihilator of x
  std::int64_t witness_z = 0;  // nonzero annihilator of y, w*z = 0 (mod n)
};

/// Nonzero zero-divisors of Z_n, ascending. Empty for prime n.
std::vector<std::int64_t> zero_divisors(std::int64_t n);

/// Nonzero annihilators of x, by full scan over t in [1, n-1].
AnnihilatorSet annihilator(std::int64_t n, std::int64_t x);

/// Adjacency in the weakly zero-divisor graph: x ~ y iff some nonzero
/// w in ann(x), z in ann(y) have w*z = 0 (mod n). The witness is the first
/// one found iterating z ascending and, per z, w ascending.
///
/// For n <= 100 the literal definition (full annihilator scans, full double
/// loop) runs alongside the divisor-based search and both results are
/// asserted equal.
Adjacency wzd_adjacent(std::int64_t n, std::int64_t x, std::int64_t y);

/// Ground-truth graph built from pairwise wzd_adjacent. Refuses n > 5000;
/// this path is quadratic and exists for verification only.
DenseGraph build_dense_oracle(std::int64_t n);

}  // namespace wzd
