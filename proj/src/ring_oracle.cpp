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

#include "wzd/ring_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "wzd/errors.hpp"
#include "wzd/numtheory.hpp"

namespace wzd {
namespace {

// Largest n for which every product formed here (w*z < n^2 in the literal
// path, d_x*d_y <= n^2/4 in the divisor search) stays within int64.
constexpr std::int64_t kOverflowLimit = 3037000499;

void check_modulus(std::int64_t n, const char* where) {
  if (n < 2) {
    throw std::invalid_argument(std::string(where) + ": n must be >= 2");
  }
  if (n > kOverflowLimit) {
    throw std::invalid_argument(std::string(where) +
                                ": n too large, n^2 intermediates would "
                                "overflow 64-bit integers");
  }
}

// Ascending divisors of `value`, where value divides n^2 so its prime
// support is contained in `n_primes`.
std::vector<std::int64_t> divisors_from_support(
    std::int64_t value, const std::vector<std::int64_t>& n_primes) {
  std::vector<std::int64_t> divisors{1};
  for (std::int64_t p : n_primes) {
    const std::size_t count = divisors.size();
    std::int64_t power = 1;
    while (value % p == 0) {
      value /= p;
      power *= p;
      for (std::size_t i = 0; i < count; ++i) {
        divisors.push_back(divisors[i] * power);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Divisor-based adjacency between the classes gcd = d_x and gcd = d_y.
// ann*(x) = { a*(n/d_x) : 1 <= a < d_x }, so w*z = 0 (mod n) reduces to
// d_x*d_y | a*b*n, i.e. t | a*b with t = d_x*d_y / gcd(d_x*d_y, n). The
// first witness in (z ascending, then w ascending) order corresponds to the
// smallest divisor b of t with t/b < d_x and b < d_y.
Adjacency adjacent_classes(std::int64_t n, std::int64_t d_x, std::int64_t d_y,
                           const std::vector<std::int64_t>& n_primes) {
  const std::int64_t product = d_x * d_y;
  const std::int64_t t = product / gcd(product, n);
  for (std::int64_t b : divisors_from_support(t, n_primes)) {
    if (b > d_y - 1) break;
    const std::int64_t a = t / b;
    if (a <= d_x - 1) {
      return {true, a * (n / d_x), b * (n / d_y)};
    }
  }
  return {};
}

// The definition as written: scan both annihilator sets in full and walk
// every (z, w) pair, z outer, until a zero product appears.
Adjacency adjacent_literal(std::int64_t n, std::int64_t x, std::int64_t y) {
  const AnnihilatorSet ann_x = annihilator(n, x);
  const AnnihilatorSet ann_y = annihilator(n, y);
  for (std::int64_t z : ann_y.elements) {
    for (std::int64_t w : ann_x.elements) {
      if ((w * z) % n == 0) return {true, w, z};
    }
  }
  return {};
}

void require_zero_divisor(std::int64_t n, std::int64_t v, const char* name) {
  if (v < 1 || v > n - 1 || gcd(v, n) == 1) {
    throw std::invalid_argument(std::string("wzd_adjacent: ") + name +
                                " is not a nonzero zero-divisor of Z_" +
                                std::to_string(n));
  }
}

}  // namespace

std::vector<std::int64_t> zero_divisors(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("zero_divisors: n must be >= 2");
  std::vector<std::int64_t> result;
  for (std::int64_t x = 1; x < n; ++x) {
    if (gcd(x, n) > 1) result.push_back(x);
  }
  return result;
}

AnnihilatorSet annihilator(std::int64_t n, std::int64_t x) {
  check_modulus(n, "annihilator");
  if (x < 1 || x > n - 1) {
    throw std::invalid_argument("annihilator: x must be in [1, n-1]");
  }
  AnnihilatorSet result{n, x, {}};
  for (std::int64_t t = 1; t < n; ++t) {
    if ((t * x) % n == 0) result.elements.push_back(t);
  }
  return result;
}

Adjacency wzd_adjacent(std::int64_t n, std::int64_t x, std::int64_t y) {
  check_modulus(n, "wzd_adjacent");
  if (x == y) throw std::invalid_argument("wzd_adjacent: x and y must differ");
  require_zero_divisor(n, x, "x");
  require_zero_divisor(n, y, "y");

  const std::vector<std::int64_t> n_primes = [&] {
    std::vector<std::int64_t> primes;
    for (const PrimePower& f : factorize(n).factors) primes.push_back(f.prime);
    return primes;
  }();
  const Adjacency fast = adjacent_classes(n, gcd(x, n), gcd(y, n), n_primes);

  if (n <= 100) {
    const Adjacency literal = adjacent_literal(n, x, y);
    if (literal.adjacent != fast.adjacent ||
        literal.witness_w != fast.witness_w ||
        literal.witness_z != fast.witness_z) {
      throw std::logic_error(
          "wzd_adjacent: divisor search disagrees with the literal "
          "definition at n=" +
          std::to_string(n) + " x=" + std::to_string(x) +
          " y=" + std::to_string(y));
    }
  }
  return fast;
}

DenseGraph build_dense_oracle(std::int64_t n) {
  check_modulus(n, "build_dense_oracle");
  if (n > 5000) {
    throw GuardError("build_dense_oracle: refusing n > 5000 (n=" +
                     std::to_string(n) + "); the oracle path is quadratic");
  }

  DenseGraph graph(n, zero_divisors(n));
  const std::vector<std::int64_t>& vertices = graph.vertices();
  const std::int64_t order = graph.order();

  std::vector<std::int64_t> n_primes;
  if (order > 0) {
    for (const PrimePower& f : factorize(n).factors) n_primes.push_back(f.prime);
  }
  std::vector<std::int64_t> vertex_gcd(order);
  for (std::int64_t i = 0; i < order; ++i) {
    vertex_gcd[i] = gcd(vertices[i], n);
  }

  // Adjacency and witness depend only on the (gcd, gcd) class pair.
  std::map<std::pair<std::int64_t, std::int64_t>, bool> class_cache;
  for (std::int64_t i = 0; i < order; ++i) {
    for (std::int64_t j = i + 1; j < order; ++j) {
      const auto key = std::minmax(vertex_gcd[i], vertex_gcd[j]);
      auto it = class_cache.find(key);
      if (it == class_cache.end()) {
        it = class_cache
                 .emplace(key, adjacent_classes(n, key.first, key.second,
                                                n_primes)
                                   .adjacent)
                 .first;
      }
      bool adjacent = it->second;
      if (n <= 100) {
        const Adjacency literal = adjacent_literal(n, vertices[i], vertices[j]);
        if (literal.adjacent != adjacent) {
          throw std::logic_error(
              "build_dense_oracle: class-pair adjacency disagrees with the "
              "literal definition at n=" +
              std::to_string(n));
        }
      }
      if (adjacent) graph.add_edge(i, j);
    }
  }
  return graph;
}

}  // namespace wzd
