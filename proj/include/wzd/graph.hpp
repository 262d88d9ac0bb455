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

/// Simple undirected graph over a fixed vertex list of ring elements.
/// The adjacency relation is stored as a packed strict upper triangle, so a
/// graph on 20000 vertices costs ~25 MB. Symmetric and irreflexive by
/// construction.
class DenseGraph {
 public:
  DenseGraph() = default;
  DenseGraph(std::int64_t modulus, std::vector<std::int64_t> vertices);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t order() const {
    return static_cast<std::int64_t>(vertices_.size());
  }
  const std::vector<std::int64_t>& vertices() const { return vertices_; }

  bool adjacent(std::int64_t i, std::int64_t j) const {
    if (i == j) return false;
    return get_bit(pair_index(i, j));
  }
  void add_edge(std::int64_t i, std::int64_t j);

  /// Vertex degrees, by vertex index. Computed on first use.
  const std::vector<std::int64_t>& degrees() const;
  std::int64_t edge_count() const;

  template <typename Visitor>  // Visitor(i, j) over all edges with i < j.
  void for_each_edge(Visitor&& visit) const {
    const std::int64_t n = order();
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (get_bit(pair_index(i, j))) visit(i, j);
      }
    }
  }

  bool same_graph(const DenseGraph& other) const {
    return modulus_ == other.modulus_ && vertices_ == other.vertices_ &&
           bits_ == other.bits_;
  }

 private:
  std::size_t pair_index(std::int64_t i, std::int64_t j) const;
  bool get_bit(std::size_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
  }

  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> vertices_;
  std::vector<std::uint64_t> bits_;
  mutable std::vector<std::int64_t> degrees_;  // lazy cache
};

}  // namespace wzd
