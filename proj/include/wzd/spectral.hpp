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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wzd/graph.hpp"
#include "wzd/structure.hpp"

namespace wzd {

using Real = double;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Matrix = DenseMatrix<Real>;

/// Raw-eigenvalue clustering tolerance, scaled by max(1, ||A||_F).
inline constexpr Real kDefaultEigTol = 1e-9;
/// Multiset-comparison tolerance between spectra, scaled the same way.
inline constexpr Real kSpectrumMatchTol = 1e-6;
/// Largest order accepted for a dense symmetric eigensolve.
inline constexpr std::int64_t kEigOrderGuard = 5000;

struct EigenvaluePair {
  Real value = 0.0;
  std::int64_t multiplicity = 0;

  bool operator==(const EigenvaluePair&) const = default;
};

/// Eigenvalue multiset with tolerance-based clustering metadata, sorted by
/// value descending.
struct Spectrum {
  std::vector<EigenvaluePair> pairs;
  Real cluster_tolerance = 0.0;

  std::int64_t order() const;
  Real trace() const;
  Real second_moment() const;  // sum of value^2 * multiplicity
  Real max_value() const;      // 0 for an empty spectrum
  std::int64_t multiplicity_near(Real target, Real tol) const;
  /// Values repeated by multiplicity, descending.
  std::vector<Real> expanded() const;

  bool operator==(const Spectrum&) const = default;
};

/// One cell of the equitable partition behind the quotient matrix: the
/// merged clique of all Complete classes (label "clique"), or a single
/// Independent class (label "d<divisor>").
struct QuotientCell {
  std::string label;
  std::int64_t size = 0;

  bool operator==(const QuotientCell&) const = default;
};

/// Quotient of the Sombor matrix over the equitable partition. Entries are
/// block row sums, generally non-symmetric; similar to a symmetric matrix
/// under diagonal scaling by sqrt(cell size).
struct QuotientMatrix {
  std::vector<QuotientCell> cells;
  Matrix entries;
};

enum class EnergyCase { Pk, PkQ, None };

/// Sombor energy with the published lower bound, plus the published closed
/// form for the two shapes that have one (compared to ground truth by the
/// audit, never asserted).
struct EnergyReport {
  std::int64_t n = 0;
  Real energy = 0.0;
  Real lower_bound = 0.0;
  std::optional<Real> closed_form;
  EnergyCase closed_form_case = EnergyCase::None;

  bool operator==(const EnergyReport&) const = default;
};

/// Sombor matrix: sqrt(d_i^2 + d_j^2) on edges, zero elsewhere. Refuses
/// order > 5000.
Matrix sombor_matrix(const DenseGraph& g);

/// Dense symmetric eigensolve with single-linkage clustering of the raw
/// eigenvalues into multiplicities (gap threshold tol * max(1, ||a||_F)).
/// Non-convergence is a hard error naming the order.
Spectrum eig_sym(const Eigen::Ref<const Matrix>& a, Real tol = kDefaultEigTol);

QuotientMatrix quotient_matrix(const CompressedGraph& g);

/// Eigenvalues of the quotient matrix, ascending (all real).
std::vector<Real> quotient_eigenvalues(const QuotientMatrix& q);

/// Spectrum assembled from twin-class eigenvalues plus the quotient:
/// -sqrt(2)(N-1) with multiplicity (clique vertices - 1), 0 with
/// multiplicity sum(size - 1) over independent classes, and one eigenvalue
/// per quotient cell. Rejects prime n.
Spectrum spectrum_theoretical(std::int64_t n);

/// Ground-truth spectrum: dense eigensolve of the Sombor matrix of the
/// expanded graph. Rejects prime n; subject to the dense guards.
Spectrum spectrum_full(std::int64_t n);

/// Eigensolve of an already-built graph (used to run the pipeline on the
/// ring-oracle graph as well as the structural one).
Spectrum spectrum_of(const DenseGraph& g);

Real energy(const Spectrum& s);

/// ||S||_F computed without the matrix, via sum of degree cubes.
Real frobenius_from_degrees(const CompressedGraph& g);
Real frobenius_from_degrees(const DenseGraph& g);

bool multiset_match(const Spectrum& a, const Spectrum& b, Real tol);

EnergyReport energy_report(std::int64_t n, const CompressedGraph& g,
                           const Spectrum& spectrum);

/// energy_report on the best spectrum available within the guards.
EnergyReport energy_bounds(std::int64_t n);

/// Plain-text export of the Sombor matrix: header "order entries", then one
/// "i j value" line per stored upper-triangle entry, 17 significant digits.
std::string matrix_triplets(const DenseGraph& g);

const char* to_string(EnergyCase c);

}  // namespace wzd
