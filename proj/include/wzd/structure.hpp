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
#include <string>
#include <vector>

#include "wzd/graph.hpp"

namespace wzd {

enum class ClassKind { Complete, Independent };

/// One divisor class A_d = { x : gcd(x, n) = d } of the vertex partition.
/// The class induces an independent set exactly when d is a prime whose
/// square does not divide n; every other class induces a clique. Degrees
/// follow from the total inter-class join: N-1 for clique vertices,
/// N-size for independent ones.
struct ClassInfo {
  std::int64_t divisor = 0;
  std::int64_t size = 0;  // totient(n / divisor)
  ClassKind kind = ClassKind::Complete;
  std::int64_t degree = 0;

  bool operator==(const ClassInfo&) const = default;
};

/// Vertex partition of the weakly zero-divisor graph of Z_n by gcd class,
/// ordered by ascending proper divisor. Empty (with trivial=true) when n is
/// prime and the graph has no vertices.
struct DivisorClassPartition {
  std::int64_t n = 0;
  std::vector<ClassInfo> classes;
  std::int64_t total_vertices = 0;  // n - totient(n) - 1
  bool trivial = false;

  bool operator==(const DivisorClassPartition&) const = default;
};

/// Class-level graph: the partition plus the (implicit, total) inter-class
/// adjacency. Enough to recover every degree and edge count without
/// materializing vertices.
struct CompressedGraph {
  DivisorClassPartition partition;

  std::int64_t order() const { return partition.total_vertices; }
  std::int64_t edge_count() const;
  /// Number of vertices lying in clique (Complete) classes.
  std::int64_t clique_vertex_count() const;
};

/// Divisor classes with sizes, kinds and degrees. n >= 2.
DivisorClassPartition partition(std::int64_t n);

/// Elements of the class A_d, ascending. d must be a proper divisor of n.
std::vector<std::int64_t> members(std::int64_t n, std::int64_t d);

/// Class-level construction of the weakly zero-divisor graph.
CompressedGraph build_compressed(std::int64_t n);

/// Materializes the generalized join as a dense graph over ascending ring
/// elements. Refuses more than 20000 vertices.
DenseGraph expand(const CompressedGraph& g);

/// DOT rendering of the expanded graph; vertices carry their ring element
/// as node id and the divisor class as a `class` attribute. Deterministic.
std::string to_dot(const CompressedGraph& g);

}  // namespace wzd
