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

#include "wzd/structure.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wzd/errors.hpp"
#include "wzd/numtheory.hpp"

namespace wzd {

std::int64_t CompressedGraph::edge_count() const {
  std::int64_t edges = 0;
  const auto& classes = partition.classes;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].kind == ClassKind::Complete) {
      edges += classes[i].size * (classes[i].size - 1) / 2;
    }
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      edges += classes[i].size * classes[j].size;
    }
  }
  return edges;
}

std::int64_t CompressedGraph::clique_vertex_count() const {
  std::int64_t count = 0;
  for (const ClassInfo& c : partition.classes) {
    if (c.kind == ClassKind::Complete) count += c.size;
  }
  return count;
}

DivisorClassPartition partition(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("partition: n must be >= 2");
  DivisorClassPartition result;
  result.n = n;
  result.total_vertices = n - totient(n) - 1;

  const std::vector<std::int64_t> divisors = proper_divisors(n);
  result.trivial = divisors.empty();
  const std::int64_t order = result.total_vertices;
  for (std::int64_t d : divisors) {
    ClassInfo info;
    info.divisor = d;
    info.size = totient(n / d);
    const Factorization fd = factorize(d);
    const bool is_prime = fd.factors.size() == 1 && fd.factors[0].exponent == 1;
    const bool square_free_in_n = (n % (d * d)) != 0;
    info.kind = (is_prime && square_free_in_n) ? ClassKind::Independent
                                               : ClassKind::Complete;
    info.degree =
        info.kind == ClassKind::Complete ? order - 1 : order - info.size;
    result.classes.push_back(info);
  }
  return result;
}

std::vector<std::int64_t> members(std::int64_t n, std::int64_t d) {
  if (n < 2) throw std::invalid_argument("members: n must be >= 2");
  if (d <= 1 || d >= n || n % d != 0) {
    throw std::invalid_argument("members: d must be a proper divisor of n");
  }
  std::vector<std::int64_t> result;
  for (std::int64_t x = d; x < n; x += d) {
    if (gcd(x, n) == d) result.push_back(x);
  }
  return result;
}

CompressedGraph build_compressed(std::int64_t n) { return {partition(n)}; }

DenseGraph expand(const CompressedGraph& g) {
  const std::int64_t n = g.partition.n;
  const std::int64_t order = g.order();
  if (order > 20000) {
    throw GuardError("expand: refusing " + std::to_string(order) +
                     " vertices (dense memory guard is 20000)");
  }

  std::vector<std::int64_t> vertices;
  vertices.reserve(order);
  for (std::int64_t x = 1; x < n; ++x) {
    if (gcd(x, n) > 1) vertices.push_back(x);
  }

  std::unordered_map<std::int64_t, std::size_t> class_of_divisor;
  for (std::size_t c = 0; c < g.partition.classes.size(); ++c) {
    class_of_divisor[g.partition.classes[c].divisor] = c;
  }
  std::vector<std::size_t> vertex_class(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    vertex_class[i] = class_of_divisor.at(gcd(vertices[i], n));
  }

  DenseGraph dense(n, std::move(vertices));
  for (std::int64_t i = 0; i < dense.order(); ++i) {
    for (std::int64_t j = i + 1; j < dense.order(); ++j) {
      const bool same_class = vertex_class[i] == vertex_class[j];
      if (!same_class || g.partition.classes[vertex_class[i]].kind ==
                             ClassKind::Complete) {
        dense.add_edge(i, j);
      }
    }
  }
  return dense;
}

std::string to_dot(const CompressedGraph& g) {
  const DenseGraph dense = expand(g);
  const std::int64_t n = g.partition.n;
  std::ostringstream out;
  out << "graph wzd_" << n << " {\n";
  for (std::int64_t v : dense.vertices()) {
    out << "  " << v << " [class=\"d" << gcd(v, n) << "\"];\n";
  }
  dense.for_each_edge([&](std::int64_t i, std::int64_t j) {
    out << "  " << dense.vertices()[i] << " -- " << dense.vertices()[j]
        << ";\n";
  });
  out << "}\n";
  return out.str();
}

}  // namespace wzd
