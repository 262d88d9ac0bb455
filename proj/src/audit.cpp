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

#include "wzd/audit.hpp"

#include <cmath>

#include "wzd/numtheory.hpp"

namespace wzd {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double int_pow(std::int64_t base, int exponent) {
  double value = 1.0;
  for (int i = 0; i < exponent; ++i) value *= static_cast<double>(base);
  return value;
}

AuditFinding make_finding(std::string id, double printed, double computed) {
  return {std::move(id), printed, computed, std::abs(printed - computed)};
}

}  // namespace

double published_spectral_radius_complete(std::int64_t n) {
  const double nphi = static_cast<double>(n - totient(n));
  return kSqrt2 * (nphi - 1.0) * (nphi - 1.0);
}

double published_clique_multiplicity_pkq(std::int64_t p, int k,
                                         std::int64_t q) {
  return int_pow(p, k - 1) * static_cast<double>(q) - 1.0;
}

double published_zero_multiplicity_pqr(std::int64_t p, std::int64_t q,
                                       std::int64_t r) {
  const double pd = static_cast<double>(p - 1);
  const double qd = static_cast<double>(q - 1);
  const double rd = static_cast<double>(r - 1);
  return pd * qd + pd * rd + qd * rd - 4.0;
}

double published_index_pkq(std::int64_t p, int k, std::int64_t q) {
  const double pk1 = int_pow(p, k - 1);
  const double clique = pk1 * static_cast<double>(q) - 1.0;
  const double degree = pk1 * static_cast<double>(p + q - 1) - 2.0;
  return clique * (clique - 1.0) * degree / kSqrt2 +
         clique * pk1 * static_cast<double>(p - 1) *
             std::sqrt(degree * degree + clique * clique);
}

double published_index_pqr(std::int64_t p, std::int64_t q, std::int64_t r) {
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  const double rd = static_cast<double>(r);
  const double d1 = pd * (qd - 1.0) + qd * (rd - 1.0) + rd * (pd - 1.0) - 4.0;
  const double dp = pd * qd + pd * rd - pd - 1.0;
  const double dq = pd * qd + qd * rd - qd - 1.0;
  const double dr = pd * rd + qd * rd - rd - 1.0;
  const double c = pd + qd + rd - 3.0;
  return c * (c - 1.0) * d1 / kSqrt2 +
         c * (qd - 1.0) * (rd - 1.0) * std::sqrt(d1 * d1 + dp * dp) +
         c * (pd - 1.0) * (rd - 1.0) * std::sqrt(d1 * d1 + dq * dq) +
         c * (pd - 1.0) * (qd - 1.0) * std::sqrt(d1 * d1 + dr * dr);
}

std::vector<AuditFinding> audit_findings(std::int64_t n,
                                         const CompressedGraph& g,
                                         const IndexReport& index,
                                         const Spectrum& spectrum,
                                         const EnergyReport& energy) {
  std::vector<AuditFinding> findings;
  if (g.partition.trivial) return findings;

  const Factorization f = factorize(n);
  const bool complete_shape = f.exponent_one_count() == 0;
  const bool pkq_shape = f.factors.size() == 2 &&
                         f.exponent_one_count() == 1 &&
                         f.higher_power_count() == 1;
  const bool pqr_shape = f.factors.size() == 3 && f.exponent_one_count() == 3;

  const double match_tol =
      kSpectrumMatchTol * std::max(1.0, frobenius_from_degrees(g));
  const double order = static_cast<double>(g.order());

  if (complete_shape) {
    findings.push_back(make_finding("AF-1", published_spectral_radius_complete(n),
                                    spectrum.max_value()));
  }
  if (pkq_shape) {
    const PrimePower powered =
        f.factors[0].exponent >= 2 ? f.factors[0] : f.factors[1];
    const PrimePower simple =
        f.factors[0].exponent >= 2 ? f.factors[1] : f.factors[0];
    const double computed_mult = static_cast<double>(
        spectrum.multiplicity_near(-kSqrt2 * (order - 1.0), match_tol));
    findings.push_back(make_finding(
        "AF-2",
        published_clique_multiplicity_pkq(powered.prime, powered.exponent,
                                          simple.prime),
        computed_mult));
  }
  if (pqr_shape) {
    findings.push_back(make_finding(
        "AF-3",
        published_zero_multiplicity_pqr(f.factors[0].prime, f.factors[1].prime,
                                        f.factors[2].prime),
        static_cast<double>(spectrum.multiplicity_near(0.0, match_tol))));
  }
  if (energy.closed_form_case != EnergyCase::None) {
    findings.push_back(
        make_finding("AF-4", *energy.closed_form, energy.energy));
  }
  if (pkq_shape) {
    const PrimePower powered =
        f.factors[0].exponent >= 2 ? f.factors[0] : f.factors[1];
    const PrimePower simple =
        f.factors[0].exponent >= 2 ? f.factors[1] : f.factors[0];
    findings.push_back(make_finding(
        "INDEX-PKQ",
        published_index_pkq(powered.prime, powered.exponent, simple.prime),
        index.so_direct));
  }
  if (pqr_shape) {
    findings.push_back(make_finding(
        "INDEX-PQR",
        published_index_pqr(f.factors[0].prime, f.factors[1].prime,
                            f.factors[2].prime),
        index.so_direct));
  }
  return findings;
}

}  // namespace wzd
