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

#include <array>
#include <cstdint>
#include <optional>

#include "wzd/graph.hpp"
#include "wzd/structure.hpp"

namespace wzd {

enum class FormulaCase {
  CompleteCase,   // all prime exponents >= 2: the graph is complete
  GeneralCase,    // at least one exponent-1 prime
  PkQCorollary,   // specialization n = p^k q (audit only)
  PqrCorollary,   // specialization n = pqr (audit only)
  NotApplicable,  // prime n
};

/// Closed-form Sombor index with the general case kept term-isolated:
/// terms[0] clique/clique edges, terms[1] clique/independent join edges,
/// terms[2] independent/independent join edges.
struct ClosedFormIndex {
  double value = 0.0;
  FormulaCase which = FormulaCase::NotApplicable;
  std::array<double, 3> terms{};
};

/// Per-n reconciliation of the three index routes. The two computed routes
/// must agree to 1e-12 relative; the closed form to 1e-9.
struct IndexReport {
  std::int64_t n = 0;
  double so_direct = 0.0;
  double so_compressed = 0.0;
  std::optional<double> so_formula;
  FormulaCase formula_case = FormulaCase::NotApplicable;
  std::optional<double> rel_delta_formula;
  std::array<double, 3> formula_terms{};

  bool operator==(const IndexReport&) const = default;
};

/// Edge-by-edge Sombor index sum over the dense graph.
double sombor_direct(const DenseGraph& g);

/// Class-level Sombor index: sqrt terms are evaluated once per class pair
/// and scaled by exact integer edge counts.
double sombor_compressed(const CompressedGraph& g);

/// Closed form selected by the factorization shape (complete case when no
/// prime has exponent 1, otherwise the general three-term form).
ClosedFormIndex sombor_formula(std::int64_t n);

IndexReport index_report(std::int64_t n, const DenseGraph& dense,
                         const CompressedGraph& compressed);

const char* to_string(FormulaCase c);

}  // namespace wzd
