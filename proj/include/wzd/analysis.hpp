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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wzd/audit.hpp"
#include "wzd/numtheory.hpp"
#include "wzd/sombor.hpp"
#include "wzd/spectral.hpp"
#include "wzd/structure.hpp"

namespace wzd {

enum class Method { Structural, Oracle, Both };
enum class SpectrumMode { Full, Quotient, Both };

struct AnalyzeOptions {
  std::optional<Method> method;         // default: Both for n <= 300
  std::optional<SpectrumMode> spectrum; // default: Both within the guards
};

struct SpectrumRecord {
  std::string source;         // "full" | "theoretical" | "both"
  std::optional<bool> match;  // set when both paths ran
  Spectrum spectrum;

  bool operator==(const SpectrumRecord&) const = default;
};

/// Everything the pipeline knows about one n.
struct AnalysisRecord {
  std::int64_t n = 0;
  Factorization factorization;
  bool trivial = false;  // prime n: the graph is null
  std::int64_t num_vertices = 0;
  std::int64_t num_edges = 0;
  std::vector<ClassInfo> classes;
  std::string method;  // resolved: "structural" | "oracle" | "both"
  std::optional<bool> oracle_match;
  IndexReport index;
  SpectrumRecord spectrum;
  EnergyReport energy;
  std::vector<AuditFinding> audit_findings;

  bool operator==(const AnalysisRecord&) const = default;
};

AnalysisRecord analyze(std::int64_t n, const AnalyzeOptions& options = {});

nlohmann::json to_json(const AnalysisRecord& record);
AnalysisRecord record_from_json(const nlohmann::json& j);
std::string to_text(const AnalysisRecord& record);

struct SweepOptions {
  bool audit = false;      // emit per-finding comment lines
  bool timestamp = true;   // "# generated <utc>" header line
  AnalyzeOptions analyze;
};

/// One CSV row per composite n in [from, to], ascending; primes become
/// comment lines; per-n failures land in the error column and never abort
/// the sweep. Analyses fan out across threads; output order is fixed.
void write_sweep_csv(std::ostream& out, std::int64_t from, std::int64_t to,
                     const SweepOptions& options = {});

/// DOT and Sombor-matrix exports; byte-deterministic. n must be composite.
std::string export_dot(std::int64_t n);
std::string export_matrix(std::int64_t n);

/// Findings whose printed/computed delta exceeds the reporting threshold.
std::int64_t audit_flag_count(const std::vector<AuditFinding>& findings);

}  // namespace wzd
