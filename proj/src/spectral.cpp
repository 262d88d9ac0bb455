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

#include "wzd/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "wzd/errors.hpp"
#include "wzd/kahan.hpp"
#include "wzd/numtheory.hpp"

namespace wzd {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

Spectrum cluster_eigenvalues(std::vector<EigenvaluePair> raw,
                             Real cluster_tolerance) {
  std::sort(raw.begin(), raw.end(),
            [](const EigenvaluePair& a, const EigenvaluePair& b) {
              return a.value < b.value;
            });
  Spectrum result;
  result.cluster_tolerance = cluster_tolerance;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i;
    double weighted = 0.0;
    std::int64_t mult = 0;
    while (j < raw.size() &&
           (j == i || raw[j].value - raw[j - 1].value <= cluster_tolerance)) {
      weighted += raw[j].value * static_cast<double>(raw[j].multiplicity);
      mult += raw[j].multiplicity;
      ++j;
    }
    result.pairs.push_back({weighted / static_cast<double>(mult), mult});
    i = j;
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const EigenvaluePair& a, const EigenvaluePair& b) {
              return a.value > b.value;
            });
  return result;
}

std::string format_real(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

}  // namespace

std::int64_t Spectrum::order() const {
  std::int64_t total = 0;
  for (const EigenvaluePair& p : pairs) total += p.multiplicity;
  return total;
}

Real Spectrum::trace() const {
  KahanSum sum;
  for (const EigenvaluePair& p : pairs) {
    sum.add(p.value * static_cast<double>(p.multiplicity));
  }
  return sum.value();
}

Real Spectrum::second_moment() const {
  KahanSum sum;
  for (const EigenvaluePair& p : pairs) {
    sum.add(p.value * p.value * static_cast<double>(p.multiplicity));
  }
  return sum.value();
}

Real Spectrum::max_value() const {
  return pairs.empty() ? 0.0 : pairs.front().value;
}

std::int64_t Spectrum::multiplicity_near(Real target, Real tol) const {
  std::int64_t mult = 0;
  for (const EigenvaluePair& p : pairs) {
    if (std::abs(p.value - target) <= tol) mult += p.multiplicity;
  }
  return mult;
}

std::vector<Real> Spectrum::expanded() const {
  std::vector<Real> values;
  values.reserve(static_cast<std::size_t>(order()));
  for (const EigenvaluePair& p : pairs) {
    values.insert(values.end(), static_cast<std::size_t>(p.multiplicity),
                  p.value);
  }
  return values;
}

Matrix sombor_matrix(const DenseGraph& g) {
  const std::int64_t order = g.order();
  if (order > kEigOrderGuard) {
    throw GuardError("sombor_matrix: refusing order " + std::to_string(order) +
                     " (dense eigensolve guard is " +
                     std::to_string(kEigOrderGuard) + ")");
  }
  const std::vector<std::int64_t>& deg = g.degrees();
  Matrix s = Matrix::Zero(order, order);
  g.for_each_edge([&](std::int64_t i, std::int64_t j) {
    const double di = static_cast<double>(deg[i]);
    const double dj = static_cast<double>(deg[j]);
    s(i, j) = s(j, i) = std::sqrt(di * di + dj * dj);
  });
  return s;
}

Spectrum eig_sym(const Eigen::Ref<const Matrix>& a, Real tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eig_sym: matrix must be square");
  }
  if (a.rows() == 0) return {{}, tol};
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("eig_sym: matrix must be symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eig_sym: eigensolver failed to converge on order " +
                       std::to_string(a.rows()));
  }

  std::vector<EigenvaluePair> raw;
  raw.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    raw.push_back({solver.eigenvalues()[i], 1});
  }
  return cluster_eigenvalues(std::move(raw), tol * std::max(1.0, a.norm()));
}

QuotientMatrix quotient_matrix(const CompressedGraph& g) {
  const auto& classes = g.partition.classes;
  const double order = static_cast<double>(g.order());
  const std::int64_t clique = g.clique_vertex_count();

  QuotientMatrix q;
  if (clique > 0) q.cells.push_back({"clique", clique});
  std::vector<double> cell_degree;
  if (clique > 0) cell_degree.push_back(order - 1.0);
  for (const ClassInfo& c : classes) {
    if (c.kind == ClassKind::Independent) {
      q.cells.push_back({"d" + std::to_string(c.divisor), c.size});
      cell_degree.push_back(static_cast<double>(c.degree));
    }
  }

  const Eigen::Index cells = static_cast<Eigen::Index>(q.cells.size());
  q.entries = Matrix::Zero(cells, cells);
  for (Eigen::Index i = 0; i < cells; ++i) {
    for (Eigen::Index j = 0; j < cells; ++j) {
      if (i == j) {
        if (q.cells[i].label == "clique") {
          q.entries(i, j) = kSqrt2 * (order - 1.0) *
                            static_cast<double>(q.cells[i].size - 1);
        }
        continue;
      }
      const double weight = std::sqrt(cell_degree[i] * cell_degree[i] +
                                      cell_degree[j] * cell_degree[j]);
      q.entries(i, j) = weight * static_cast<double>(q.cells[j].size);
    }
  }
  return q;
}

std::vector<Real> quotient_eigenvalues(const QuotientMatrix& q) {
  const Eigen::Index cells = q.entries.rows();
  if (cells == 0) return {};
  // Similar symmetric matrix: scale by sqrt(cell sizes).
  Matrix sym(cells, cells);
  for (Eigen::Index i = 0; i < cells; ++i) {
    for (Eigen::Index j = 0; j < cells; ++j) {
      sym(i, j) = q.entries(i, j) *
                  std::sqrt(static_cast<double>(q.cells[i].size) /
                            static_cast<double>(q.cells[j].size));
    }
  }
  sym = ((sym + sym.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("quotient_eigenvalues: eigensolver failed on order " +
                       std::to_string(cells));
  }
  return {solver.eigenvalues().data(),
          solver.eigenvalues().data() + solver.eigenvalues().size()};
}

Spectrum spectrum_theoretical(std::int64_t n) {
  const CompressedGraph g = build_compressed(n);
  if (g.partition.trivial) {
    throw std::invalid_argument(
        "spectrum_theoretical: not applicable, n is prime");
  }

  const double order = static_cast<double>(g.order());
  std::vector<EigenvaluePair> raw;
  const std::int64_t clique = g.clique_vertex_count();
  if (clique >= 2) {
    raw.push_back({-kSqrt2 * (order - 1.0), clique - 1});
  }
  std::int64_t zero_mult = 0;
  for (const ClassInfo& c : g.partition.classes) {
    if (c.kind == ClassKind::Independent) zero_mult += c.size - 1;
  }
  if (zero_mult > 0) raw.push_back({0.0, zero_mult});
  for (Real value : quotient_eigenvalues(quotient_matrix(g))) {
    raw.push_back({value, 1});
  }

  const double tolerance =
      kDefaultEigTol * std::max(1.0, frobenius_from_degrees(g));
  return cluster_eigenvalues(std::move(raw), tolerance);
}

Spectrum spectrum_full(std::int64_t n) {
  const CompressedGraph g = build_compressed(n);
  if (g.partition.trivial) {
    throw std::invalid_argument("spectrum_full: not applicable, n is prime");
  }
  return spectrum_of(expand(g));
}

Spectrum spectrum_of(const DenseGraph& g) { return eig_sym(sombor_matrix(g)); }

Real energy(const Spectrum& s) {
  KahanSum sum;
  for (const EigenvaluePair& p : s.pairs) {
    sum.add(std::abs(p.value) * static_cast<double>(p.multiplicity));
  }
  return sum.value();
}

// ||S||_F^2 = trace(S^2) = 2 * sum_v d_v^3: every edge {u,v} stores
// d_u^2 + d_v^2 in two symmetric entries.
Real frobenius_from_degrees(const CompressedGraph& g) {
  KahanSum sum;
  for (const ClassInfo& c : g.partition.classes) {
    const double d = static_cast<double>(c.degree);
    sum.add(static_cast<double>(c.size) * d * d * d);
  }
  return std::sqrt(2.0 * sum.value());
}

Real frobenius_from_degrees(const DenseGraph& g) {
  KahanSum sum;
  for (std::int64_t d : g.degrees()) {
    const double dd = static_cast<double>(d);
    sum.add(dd * dd * dd);
  }
  return std::sqrt(2.0 * sum.value());
}

bool multiset_match(const Spectrum& a, const Spectrum& b, Real tol) {
  const std::vector<Real> va = a.expanded();
  const std::vector<Real> vb = b.expanded();
  if (va.size() != vb.size()) return false;
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (std::abs(va[i] - vb[i]) > tol) return false;
  }
  return true;
}

EnergyReport energy_report(std::int64_t n, const CompressedGraph& g,
                           const Spectrum& spectrum) {
  EnergyReport report;
  report.n = n;
  report.energy = energy(spectrum);

  const double nphi = static_cast<double>(g.order() + 1);
  double independent_sum = 0.0;
  for (const ClassInfo& c : g.partition.classes) {
    if (c.kind == ClassKind::Independent) {
      independent_sum += static_cast<double>(c.size);
    }
  }
  report.lower_bound = kSqrt2 * (nphi - 2.0) * (nphi - independent_sum - 2.0);

  const Factorization f = factorize(n);
  if (f.factors.size() == 1 && f.factors[0].exponent >= 2) {
    // Published closed form for n = p^k.
    const double pk1 = static_cast<double>(f.reconstruct() / f.factors[0].prime);
    report.closed_form = kSqrt2 * (pk1 - 2.0) * (pk1 - 2.0) +
                         kSqrt2 * (pk1 - 1.0) * (pk1 - 1.0);
    report.closed_form_case = EnergyCase::Pk;
  } else if (f.factors.size() == 2 && f.exponent_one_count() == 1 &&
             f.higher_power_count() == 1) {
    // Published closed form for n = p^k q, k >= 2 (p the powered prime).
    const PrimePower powered =
        f.factors[0].exponent >= 2 ? f.factors[0] : f.factors[1];
    const PrimePower simple =
        f.factors[0].exponent >= 2 ? f.factors[1] : f.factors[0];
    std::int64_t pk = 1;
    for (int i = 0; i < powered.exponent; ++i) pk *= powered.prime;
    const double big_p = static_cast<double>(pk / powered.prime) *
                         static_cast<double>(simple.prime);
    const double phi_pk = static_cast<double>(totient(pk));
    const double lambda =
        2.0 * (big_p + phi_pk - 1.0) * (big_p + phi_pk - 1.0) *
            (big_p - 2.0) * (big_p - 2.0) +
        4.0 * phi_pk * (big_p - 1.0) * (big_p - 1.0) * (big_p + phi_pk - 1.0) *
            (big_p + phi_pk - 1.0);
    report.closed_form =
        kSqrt2 * (big_p + phi_pk - 1.0) * (big_p - 1.0) + std::sqrt(lambda);
    report.closed_form_case = EnergyCase::PkQ;
  }
  return report;
}

EnergyReport energy_bounds(std::int64_t n) {
  const CompressedGraph g = build_compressed(n);
  if (g.partition.trivial) {
    throw std::invalid_argument("energy_bounds: not applicable, n is prime");
  }
  const Spectrum spectrum = g.order() <= kEigOrderGuard
                                ? spectrum_of(expand(g))
                                : spectrum_theoretical(n);
  return energy_report(n, g, spectrum);
}

std::string matrix_triplets(const DenseGraph& g) {
  const std::int64_t order = g.order();
  if (order > kEigOrderGuard) {
    throw GuardError("matrix_triplets: refusing order " +
                     std::to_string(order) + " (dense eigensolve guard is " +
                     std::to_string(kEigOrderGuard) + ")");
  }
  const std::vector<std::int64_t>& deg = g.degrees();
  std::ostringstream out;
  out << order << " " << g.edge_count() << "\n";
  g.for_each_edge([&](std::int64_t i, std::int64_t j) {
    const double di = static_cast<double>(deg[i]);
    const double dj = static_cast<double>(deg[j]);
    out << i << " " << j << " " << format_real(std::sqrt(di * di + dj * dj))
        << "\n";
  });
  return out.str();
}

const char* to_string(EnergyCase c) {
  switch (c) {
    case EnergyCase::Pk: return "Pk";
    case EnergyCase::PkQ: return "PkQ";
    case EnergyCase::None: return "None";
  }
  return "None";
}

}  // namespace wzd
