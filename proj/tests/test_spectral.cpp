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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wzd/errors.hpp"
#include "wzd/sombor.hpp"
#include "wzd/spectral.hpp"

using namespace wzd;

namespace {

const double kSqrt2 = std::sqrt(2.0);

DenseGraph dense_of(std::int64_t n) { return expand(build_compressed(n)); }

// Roots of x^2 - 24*sqrt(2)*x - 610, the characteristic polynomial of the
// n=12 quotient.
const double kQuad12Plus = (24.0 * kSqrt2 + std::sqrt(3592.0)) / 2.0;
const double kQuad12Minus = (24.0 * kSqrt2 - std::sqrt(3592.0)) / 2.0;

}  // namespace

TEST_CASE("sombor matrix entries") {
  const Matrix s9 = sombor_matrix(dense_of(9));
  REQUIRE(s9.rows() == 2);
  CHECK(s9(0, 0) == 0.0);
  CHECK(s9(1, 1) == 0.0);
  CHECK(s9(0, 1) == doctest::Approx(kSqrt2).epsilon(1e-15));
  CHECK(s9(1, 0) == s9(0, 1));

  const Matrix s4 = sombor_matrix(dense_of(4));
  REQUIRE(s4.rows() == 1);
  CHECK(s4(0, 0) == 0.0);

  const Matrix s8 = sombor_matrix(dense_of(8));
  REQUIRE(s8.rows() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        CHECK(s8(i, j) == 0.0);
      } else {
        CHECK(s8(i, j) == doctest::Approx(2.0 * kSqrt2).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("sombor matrix guard") {
  std::vector<std::int64_t> vertices(5001);
  std::iota(vertices.begin(), vertices.end(), 1);
  const DenseGraph too_big(0, std::move(vertices));
  CHECK_THROWS_AS(sombor_matrix(too_big), GuardError);
}

TEST_CASE("symmetric eigensolve with clustering") {
  Matrix anti(2, 2);
  anti << 0.0, kSqrt2, kSqrt2, 0.0;
  const Spectrum s = eig_sym(anti);
  REQUIRE(s.pairs.size() == 2);
  CHECK(s.pairs[0].value == doctest::Approx(kSqrt2).epsilon(1e-14));
  CHECK(s.pairs[1].value == doctest::Approx(-kSqrt2).epsilon(1e-14));

  // K_3 with unit weights sqrt(2)*2: eigenvalues 2*sqrt(2)*{2, -1, -1}.
  const Spectrum s8 = eig_sym(sombor_matrix(dense_of(8)));
  REQUIRE(s8.pairs.size() == 2);
  CHECK(s8.pairs[0].multiplicity == 1);
  CHECK(s8.pairs[0].value == doctest::Approx(4.0 * kSqrt2).epsilon(1e-13));
  CHECK(s8.pairs[1].multiplicity == 2);
  CHECK(s8.pairs[1].value == doctest::Approx(-2.0 * kSqrt2).epsilon(1e-13));

  const Spectrum zero = eig_sym(Matrix::Zero(1, 1));
  REQUIRE(zero.pairs.size() == 1);
  CHECK(zero.pairs[0].value == 0.0);
  CHECK(zero.pairs[0].multiplicity == 1);

  CHECK(eig_sym(Matrix::Zero(0, 0)).pairs.empty());
}

TEST_CASE("eigensolve input validation") {
  CHECK_THROWS_AS(eig_sym(Matrix::Zero(2, 3)), std::invalid_argument);
  Matrix skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(eig_sym(skew), std::invalid_argument);
}

TEST_CASE("quotient matrix cells and entries") {
  const QuotientMatrix q12 = quotient_matrix(build_compressed(12));
  REQUIRE(q12.cells.size() == 2);
  CHECK(q12.cells[0] == QuotientCell{"clique", 5});
  CHECK(q12.cells[1] == QuotientCell{"d3", 2});
  CHECK(q12.entries(0, 0) == doctest::Approx(24.0 * kSqrt2).epsilon(1e-15));
  CHECK(q12.entries(0, 1) ==
        doctest::Approx(2.0 * std::sqrt(61.0)).epsilon(1e-15));
  CHECK(q12.entries(1, 0) ==
        doctest::Approx(5.0 * std::sqrt(61.0)).epsilon(1e-15));
  CHECK(q12.entries(1, 1) == 0.0);

  const QuotientMatrix q8 = quotient_matrix(build_compressed(8));
  REQUIRE(q8.cells.size() == 1);
  CHECK(q8.cells[0] == QuotientCell{"clique", 3});
  CHECK(q8.entries(0, 0) == doctest::Approx(4.0 * kSqrt2).epsilon(1e-15));

  const QuotientMatrix q6 = quotient_matrix(build_compressed(6));
  REQUIRE(q6.cells.size() == 2);
  CHECK(q6.cells[0] == QuotientCell{"d2", 2});
  CHECK(q6.cells[1] == QuotientCell{"d3", 1});
  CHECK(q6.entries(0, 0) == 0.0);
  CHECK(q6.entries(0, 1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(q6.entries(1, 0) ==
        doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-15));
  CHECK(q6.entries(1, 1) == 0.0);
}

TEST_CASE("theoretical spectrum of Z_12") {
  const Spectrum s = spectrum_theoretical(12);
  CHECK(s.order() == 7);
  REQUIRE(s.pairs.size() == 4);
  CHECK(s.pairs[0].value == doctest::Approx(kQuad12Plus).epsilon(1e-12));
  CHECK(s.pairs[0].multiplicity == 1);
  CHECK(s.pairs[1].value == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(s.pairs[1].multiplicity == 1);
  CHECK(s.pairs[2].value == doctest::Approx(-6.0 * kSqrt2).epsilon(1e-12));
  CHECK(s.pairs[2].multiplicity == 4);
  CHECK(s.pairs[3].value == doctest::Approx(kQuad12Minus).epsilon(1e-12));
  CHECK(s.pairs[3].multiplicity == 1);
  CHECK(std::abs(s.trace()) <= 1e-10);
}

TEST_CASE("full and theoretical spectra cross-check") {
  for (std::int64_t n : {8, 9, 12, 18, 30, 36, 60, 72, 100}) {
    const Spectrum full = spectrum_full(n);
    const Spectrum theoretical = spectrum_theoretical(n);
    const double tol =
        kSpectrumMatchTol *
        std::max(1.0, frobenius_from_degrees(build_compressed(n)));
    CHECK(multiset_match(full, theoretical, tol));
  }
  CHECK(spectrum_full(18).order() == 11);

  const Spectrum s9 = spectrum_full(9);
  REQUIRE(s9.pairs.size() == 2);
  CHECK(s9.pairs[0].value == doctest::Approx(kSqrt2).epsilon(1e-13));
  CHECK(s9.pairs[1].value == doctest::Approx(-kSqrt2).epsilon(1e-13));
}

TEST_CASE("spectra reject prime moduli") {
  CHECK_THROWS_AS(spectrum_theoretical(7), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_full(13), std::invalid_argument);
}

TEST_CASE("energy") {
  CHECK(energy(spectrum_full(8)) ==
        doctest::Approx(8.0 * kSqrt2).epsilon(1e-13));
  CHECK(energy(spectrum_full(9)) ==
        doctest::Approx(2.0 * kSqrt2).epsilon(1e-13));
  CHECK(energy(Spectrum{}) == 0.0);
}

TEST_CASE("energy report fixed points") {
  const EnergyReport r12 = energy_bounds(12);
  CHECK(r12.lower_bound == doctest::Approx(24.0 * kSqrt2).epsilon(1e-14));
  CHECK(r12.energy == doctest::Approx(kQuad12Plus - kQuad12Minus +
                                      24.0 * kSqrt2)
                          .epsilon(1e-12));
  CHECK(r12.energy >= r12.lower_bound - 1e-6);
  CHECK(r12.closed_form_case == EnergyCase::PkQ);
  // Published closed form for n = 12: 35*sqrt(2) + sqrt(11368).
  CHECK(*r12.closed_form ==
        doctest::Approx(35.0 * kSqrt2 + std::sqrt(11368.0)).epsilon(1e-14));

  const EnergyReport r8 = energy_bounds(8);
  CHECK(r8.energy == doctest::Approx(8.0 * kSqrt2).epsilon(1e-13));
  CHECK(r8.closed_form_case == EnergyCase::Pk);
  CHECK(*r8.closed_form == doctest::Approx(13.0 * kSqrt2).epsilon(1e-14));

  const EnergyReport r9 = energy_bounds(9);
  CHECK(r9.lower_bound == doctest::Approx(kSqrt2).epsilon(1e-14));
  CHECK(r9.energy == doctest::Approx(2.0 * kSqrt2).epsilon(1e-13));

  const EnergyReport r6 = energy_bounds(6);  // no published closed form
  CHECK(r6.closed_form_case == EnergyCase::None);
  CHECK_FALSE(r6.closed_form.has_value());
}

TEST_CASE("spectrum invariants over a composite range") {
  for (std::int64_t n = 4; n <= 200; ++n) {
    const CompressedGraph g = build_compressed(n);
    if (g.partition.trivial) continue;

    const DenseGraph dense = expand(g);
    const Spectrum s = spectrum_of(dense);
    const double fro = frobenius_from_degrees(g);

    CHECK(s.order() == g.order());
    CHECK(std::abs(s.trace()) <= 1e-8 * fro);
    CHECK(std::abs(s.second_moment() - fro * fro) <=
          1e-8 * std::max(1.0, fro * fro));

    const double so = sombor_direct(dense);
    if (dense.edge_count() > 0) {
      CHECK(s.max_value() >=
            2.0 * so / static_cast<double>(g.order()) - 1e-9);
    }

    // Twin multiplicity floors.
    const double match_tol = kSpectrumMatchTol * std::max(1.0, fro);
    std::int64_t independent = 0;
    for (const ClassInfo& c : g.partition.classes) {
      if (c.kind == ClassKind::Independent) independent += c.size - 1;
    }
    CHECK(s.multiplicity_near(0.0, match_tol) >= independent);
    const std::int64_t clique = g.clique_vertex_count();
    if (clique >= 2) {
      CHECK(s.multiplicity_near(-kSqrt2 *
                                    static_cast<double>(g.order() - 1),
                                match_tol) >= clique - 1);
    }

    // Quotient containment: each quotient eigenvalue is an eigenvalue of
    // the full matrix.
    for (double q : quotient_eigenvalues(quotient_matrix(g))) {
      CHECK(s.multiplicity_near(q, match_tol) >= 1);
    }

    // Energy bound.
    const EnergyReport report = energy_report(n, g, s);
    CHECK(report.energy >= report.lower_bound - 1e-6);
  }
}

TEST_CASE("multiset comparison") {
  Spectrum a{{{2.0, 1}, {0.0, 2}}, 0.0};
  Spectrum b{{{2.0 + 1e-9, 1}, {0.0, 2}}, 0.0};
  CHECK(multiset_match(a, b, 1e-6));
  Spectrum c{{{2.0, 1}, {0.0, 1}}, 0.0};
  CHECK_FALSE(multiset_match(a, c, 1e-6));
  Spectrum d{{{2.1, 1}, {0.0, 2}}, 0.0};
  CHECK_FALSE(multiset_match(a, d, 1e-6));
}

TEST_CASE("matrix triplet export") {
  CHECK(matrix_triplets(dense_of(9)) == "2 1\n0 1 1.4142135623730951\n");
  CHECK(matrix_triplets(dense_of(4)) == "1 0\n");
}
