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

#include "wzd/sombor.hpp"
#include "wzd/spectral.hpp"
#include "wzd/structure.hpp"

namespace wzd {

/// One audited claim: a published closed-form value next to the value this
/// library computes from the graph itself. Claim ids are stable strings so
/// downstream tooling can diff findings across versions:
///
///   AF-1       spectral radius of the complete case
///   AF-2       clique twin-eigenvalue multiplicity for n = p^k q
///   AF-3       zero-eigenvalue multiplicity for n = pqr
///   AF-4       closed-form energies (n = p^k and n = p^k q)
///   INDEX-PKQ  Sombor-index corollary for n = p^k q
///   INDEX-PQR  Sombor-index corollary for n = pqr
///
/// Published values are recorded verbatim, never asserted correct.
struct AuditFinding {
  std::string claim_id;
  double printed_value = 0.0;
  double computed_value = 0.0;
  double abs_delta = 0.0;

  bool operator==(const AuditFinding&) const = default;
};

/// All findings applicable to n, in claim-id order.
std::vector<AuditFinding> audit_findings(std::int64_t n,
                                         const CompressedGraph& g,
                                         const IndexReport& index,
                                         const Spectrum& spectrum,
                                         const EnergyReport& energy);

/// Published formulas, evaluated exactly as printed.
double published_spectral_radius_complete(std::int64_t n);
double published_clique_multiplicity_pkq(std::int64_t p, int k, std::int64_t q);
double published_zero_multiplicity_pqr(std::int64_t p, std::int64_t q,
                                       std::int64_t r);
double published_index_pkq(std::int64_t p, int k, std::int64_t q);
double published_index_pqr(std::int64_t p, std::int64_t q, std::int64_t r);

}  // namespace wzd
