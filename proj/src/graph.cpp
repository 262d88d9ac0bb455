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

#include "wzd/graph.hpp"

#include <stdexcept>
#include <utility>

namespace wzd {

DenseGraph::DenseGraph(std::int64_t modulus,
                       std::vector<std::int64_t> vertices)
    : modulus_(modulus), vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  const std::size_t pairs = n * (n - 1) / 2;
  bits_.assign((pairs + 63) / 64, 0);
}

std::size_t DenseGraph::pair_index(std::int64_t i, std::int64_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = vertices_.size();
  return static_cast<std::size_t>(i) * n -
         static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

void DenseGraph::add_edge(std::int64_t i, std::int64_t j) {
  if (i == j) throw std::invalid_argument("add_edge: self-loop");
  const std::size_t idx = pair_index(i, j);
  bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  degrees_.clear();
}

const std::vector<std::int64_t>& DenseGraph::degrees() const {
  if (degrees_.empty() && order() > 0) {
    degrees_.assign(vertices_.size(), 0);
    for_each_edge([this](std::int64_t i, std::int64_t j) {
      ++degrees_[i];
      ++degrees_[j];
    });
  }
  return degrees_;
}

std::int64_t DenseGraph::edge_count() const {
  std::int64_t count = 0;
  for (std::uint64_t word : bits_) count += __builtin_popcountll(word);
  return count;
}

}  // namespace wzd
