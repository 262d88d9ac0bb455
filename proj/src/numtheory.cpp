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

#include "wzd/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wzd {

int Factorization::exponent_one_count() const {
  return static_cast<int>(
      std::count_if(factors.begin(), factors.end(),
                    [](const PrimePower& f) { return f.exponent == 1; }));
}

int Factorization::higher_power_count() const {
  return static_cast<int>(factors.size()) - exponent_one_count();
}

std::vector<std::int64_t> Factorization::exponent_one_primes() const {
  std::vector<std::int64_t> primes;
  for (const PrimePower& f : factors) {
    if (f.exponent == 1) primes.push_back(f.prime);
  }
  return primes;
}

std::int64_t Factorization::reconstruct() const {
  std::int64_t product = 1;
  for (const PrimePower& f : factors) {
    for (int i = 0; i < f.exponent; ++i) product *= f.prime;
  }
  return product;
}

Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  Factorization result;
  result.n = n;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower f{p, 0};
    while (rest % p == 0) {
      rest /= p;
      ++f.exponent;
    }
    result.factors.push_back(f);
  }
  if (rest > 1) result.factors.push_back({rest, 1});
  return result;
}

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
  if (n == 1) return 1;
  std::int64_t phi = n;
  for (const PrimePower& f : factorize(n).factors) {
    phi -= phi / f.prime;
  }
  return phi;
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("proper_divisors: n must be >= 2");
  std::vector<std::int64_t> divisors{1};
  for (const PrimePower& f : factorize(n).factors) {
    const std::size_t count = divisors.size();
    std::int64_t power = 1;
    for (int e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < count; ++i) {
        divisors.push_back(divisors[i] * power);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return {divisors.begin() + 1, divisors.end() - 1};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

}  // namespace wzd
