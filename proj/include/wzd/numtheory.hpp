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

namespace wzd {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization n = p_1^{e_1} ... p_s^{e_s}, primes ascending.
struct Factorization {
  std::int64_t n = 0;
  std::vector<PrimePower> factors;

  /// Number of primes with exponent exactly 1.
  int exponent_one_count() const;
  /// Number of primes with exponent >= 2.
  int higher_power_count() const;
  /// The primes with exponent exactly 1, ascending.
  std::vector<std::int64_t> exponent_one_primes() const;
  /// Product of prime^exponent; equals n for a valid factorization.
  std::int64_t reconstruct() const;

  bool operator==(const Factorization&) const = default;
};

/// Deterministic trial division up to sqrt(n). Rejects n < 2.
Factorization factorize(std::int64_t n);

/// Euler totient, computed multiplicatively from the factorization.
/// totient(1) == 1 by convention. Rejects n < 1.
std::int64_t totient(std::int64_t n);

/// All divisors d of n with 1 < d < n, strictly increasing. Rejects n < 2.
std::vector<std::int64_t> proper_divisors(std::int64_t n);

/// Greatest common divisor with gcd(a, 0) == a. Rejects (0, 0).
std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace wzd
