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

#include "wzd/sombor.hpp"

#include <cmath>
#include <stdexcept>

#include "wzd/kahan.hpp"
#include "wzd/numtheory.hpp"

namespace wzd {
namespace {

double edge_weight(double deg_u, double deg_v) {
  return std::sqrt(deg_u * deg_u + deg_v * deg_v);
}

}  // namespace

double sombor_direct(const DenseGraph& g) {
  const std::vector<std::int64_t>& deg = g.degrees();
  KahanSum sum;
  g.for_each_edge([&](std::int64_t i, std::int64_t j) {
    sum.add(edge_weight(static_cast<double>(deg[i]),
                        static_cast<double>(deg[j])));
  });
  return sum.value();
}

double sombor_compressed(const CompressedGraph& g) {
  const auto& classes = g.partition.classes;
  KahanSum sum;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const double deg_i = static_cast<double>(classes[i].degree);
    if (classes[i].kind == ClassKind::Complete) {
      const std::int64_t within = classes[i].size * (classes[i].size - 1) / 2;
      sum.add(static_cast<double>(within) * std::sqrt(2.0) * deg_i);
    }
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const std::int64_t between = classes[i].size * classes[j].size;
      sum.add(static_cast<double>(between) *
              edge_weight(deg_i, static_cast<double>(classes[j].degree)));
    }
  }
  return sum.value();
}

ClosedFormIndex sombor_formula(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("sombor_formula: n must be >= 2");
  const Factorization f = factorize(n);
  if (f.factors.size() == 1 && f.factors[0].exponent == 1) {
    return {0.0, FormulaCase::NotApplicable, {}};
  }

  const double nphi = static_cast<double>(n - totient(n));
  const std::vector<std::int64_t> simple_primes = f.exponent_one_primes();

  if (simple_primes.empty()) {
    // Complete graph on n - phi(n) - 1 vertices.
    ClosedFormIndex result;
    result.which = FormulaCase::CompleteCase;
    result.value = (nphi - 1.0) / std::sqrt(2.0) * (nphi - 2.0) * (nphi - 2.0);
    result.terms = {result.value, 0.0, 0.0};
    return result;
  }

  // General case. Independent-class sizes s_i = phi(n/p_i); clique block of
  // size k = n - phi(n) - sum s_i - 1 with vertex degree n - phi(n) - 2;
  // independent vertices have degree n - phi(n) - s_i - 1. The cross sum
  // over independent class pairs runs over unordered pairs.
  std::vector<double> sizes;
  for (std::int64_t p : simple_primes) {
    sizes.push_back(static_cast<double>(totient(n / p)));
  }
  double size_sum = 0.0;
  for (double s : sizes) size_sum += s;
  const double clique = nphi - size_sum - 1.0;
  const double clique_degree = nphi - 2.0;

  ClosedFormIndex result;
  result.which = FormulaCase::GeneralCase;
  result.terms[0] = clique_degree / std::sqrt(2.0) * clique * (clique - 1.0);
  result.terms[1] = 0.0;
  for (double s : sizes) {
    result.terms[1] +=
        clique * s * edge_weight(clique_degree, nphi - s - 1.0);
  }
  result.terms[2] = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      result.terms[2] += sizes[i] * sizes[j] *
                         edge_weight(nphi - sizes[i] - 1.0,
                                     nphi - sizes[j] - 1.0);
    }
  }
  result.value = result.terms[0] + result.terms[1] + result.terms[2];
  return result;
}

IndexReport index_report(std::int64_t n, const DenseGraph& dense,
                         const CompressedGraph& compressed) {
  IndexReport report;
  report.n = n;
  report.so_direct = sombor_direct(dense);
  report.so_compressed = sombor_compressed(compressed);
  const ClosedFormIndex formula = sombor_formula(n);
  report.formula_case = formula.which;
  if (formula.which != FormulaCase::NotApplicable) {
    report.so_formula = formula.value;
    report.formula_terms = formula.terms;
    report.rel_delta_formula = std::abs(formula.value - report.so_direct) /
                               std::max(1.0, report.so_direct);
  }
  return report;
}

const char* to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::CompleteCase: return "CompleteCase";
    case FormulaCase::GeneralCase: return "GeneralCase";
    case FormulaCase::PkQCorollary: return "PkQCorollary";
    case FormulaCase::PqrCorollary: return "PqrCorollary";
    case FormulaCase::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

}  // namespace wzd
