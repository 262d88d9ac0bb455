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

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "wzd/analysis.hpp"
#include "wzd/errors.hpp"

using namespace wzd;

namespace {

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column header
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

}  // namespace

TEST_CASE("analyze 18 reproduces the class structure") {
  const AnalysisRecord rec = analyze(18);
  CHECK(rec.n == 18);
  CHECK_FALSE(rec.trivial);
  CHECK(rec.num_vertices == 11);
  CHECK(rec.num_edges == 40);
  REQUIRE(rec.classes.size() == 4);
  CHECK(rec.classes[0] == ClassInfo{2, 6, ClassKind::Independent, 5});
  CHECK(rec.classes[1] == ClassInfo{3, 2, ClassKind::Complete, 10});
  CHECK(rec.classes[2] == ClassInfo{6, 2, ClassKind::Complete, 10});
  CHECK(rec.classes[3] == ClassInfo{9, 1, ClassKind::Complete, 10});
  CHECK(rec.method == "both");
  REQUIRE(rec.oracle_match.has_value());
  CHECK(*rec.oracle_match);

  // Record invariants: vertex count and handshake.
  std::int64_t degree_sum = 0;
  for (const ClassInfo& c : rec.classes) degree_sum += c.size * c.degree;
  CHECK(degree_sum == 2 * rec.num_edges);
}

TEST_CASE("analyze a prime modulus") {
  const AnalysisRecord rec = analyze(7);
  CHECK(rec.trivial);
  CHECK(rec.num_vertices == 0);
  CHECK(rec.num_edges == 0);
  CHECK(rec.classes.empty());
  CHECK(rec.spectrum.spectrum.pairs.empty());
  CHECK(rec.audit_findings.empty());
  CHECK(rec.index.formula_case == FormulaCase::NotApplicable);
}

TEST_CASE("analyze rejects n < 2") {
  CHECK_THROWS_AS(analyze(1), std::invalid_argument);
  CHECK_THROWS_AS(analyze(0), std::invalid_argument);
}

TEST_CASE("spectrum cross-path flag") {
  AnalyzeOptions options;
  options.spectrum = SpectrumMode::Both;
  const AnalysisRecord rec = analyze(12, options);
  CHECK(rec.spectrum.source == "both");
  REQUIRE(rec.spectrum.match.has_value());
  CHECK(*rec.spectrum.match);
}

TEST_CASE("single-vertex graph at n=4") {
  const AnalysisRecord rec = analyze(4);
  CHECK(rec.num_vertices == 1);
  CHECK(rec.num_edges == 0);
  CHECK(rec.index.so_direct == 0.0);
  CHECK(rec.index.formula_case == FormulaCase::CompleteCase);
  CHECK(*rec.index.so_formula == 0.0);
  REQUIRE(rec.spectrum.spectrum.pairs.size() == 1);
  CHECK(rec.spectrum.spectrum.pairs[0] == EigenvaluePair{0.0, 1});
}

TEST_CASE("explicit oracle method beyond its cap is refused") {
  AnalyzeOptions options;
  options.method = Method::Oracle;
  CHECK_THROWS_AS(analyze(5002, options), GuardError);
}

TEST_CASE("json round trip") {
  for (std::int64_t n : {4, 6, 7, 12, 18, 30, 36, 100}) {
    const AnalysisRecord rec = analyze(n);
    const std::string serialized = to_json(rec).dump();
    const AnalysisRecord parsed =
        record_from_json(nlohmann::json::parse(serialized));
    CHECK(parsed == rec);
  }
}

TEST_CASE("text rendering mentions the key facts") {
  const std::string text = to_text(analyze(18));
  CHECK(text.find("n = 18 = 2 * 3^2") != std::string::npos);
  CHECK(text.find("vertices: 11") != std::string::npos);
  CHECK(text.find("d=2: size 6, independent") != std::string::npos);

  const std::string trivial = to_text(analyze(7));
  CHECK(trivial.find("null graph") != std::string::npos);
}

TEST_CASE("matrix export") {
  CHECK(export_matrix(9) == "2 1\n0 1 1.4142135623730951\n");
  CHECK(export_matrix(4) == "1 0\n");
  CHECK_THROWS_AS(export_matrix(7), std::invalid_argument);
}

TEST_CASE("dot export") {
  const std::string dot = export_dot(18);
  std::istringstream in(dot);
  std::string line;
  int node_lines = 0;
  int edge_lines = 0;
  while (std::getline(in, line)) {
    if (line.find("[class=") != std::string::npos) ++node_lines;
    if (line.find(" -- ") != std::string::npos) ++edge_lines;
  }
  CHECK(node_lines == 11);
  CHECK(edge_lines == 40);
  CHECK_THROWS_AS(export_dot(13), std::invalid_argument);
}

TEST_CASE("sweep emits one row per composite, ascending") {
  std::ostringstream out;
  SweepOptions options;
  options.timestamp = false;
  write_sweep_csv(out, 4, 30, options);
  const auto rows = data_rows(out.str());
  CHECK(rows.size() == 19);
  CHECK(rows.front().rfind("4,", 0) == 0);
  CHECK(rows.back().rfind("30,", 0) == 0);
  for (const std::string& row : rows) {
    CHECK(row.find(",true,") != std::string::npos);  // spectrum_match
  }
}

TEST_CASE("sweep over a single prime emits only a comment line") {
  std::ostringstream out;
  SweepOptions options;
  options.timestamp = false;
  write_sweep_csv(out, 7, 7, options);
  CHECK(data_rows(out.str()).empty());
  CHECK(out.str().find("# n=7 skipped: prime") != std::string::npos);
}

TEST_CASE("sweep output is deterministic without the timestamp") {
  SweepOptions options;
  options.timestamp = false;
  options.audit = true;
  std::ostringstream first;
  std::ostringstream second;
  write_sweep_csv(first, 4, 40, options);
  write_sweep_csv(second, 4, 40, options);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("# audit n=30 AF-3") != std::string::npos);
  CHECK(first.str().find("# audit n=8 AF-1") != std::string::npos);
}

TEST_CASE("sweep validates its range") {
  std::ostringstream out;
  CHECK_THROWS_AS(write_sweep_csv(out, 10, 4, {}), std::invalid_argument);
  CHECK_THROWS_AS(write_sweep_csv(out, 1, 4, {}), std::invalid_argument);
}

TEST_CASE("audit flag counting") {
  const AnalysisRecord r8 = analyze(8);
  CHECK(audit_flag_count(r8.audit_findings) == 2);  // AF-1 and AF-4
  const AnalysisRecord r30 = analyze(30);
  CHECK(audit_flag_count(r30.audit_findings) >= 2);  // AF-3 and INDEX-PQR
  const AnalysisRecord r180 = analyze(180);
  CHECK(audit_flag_count(r180.audit_findings) == 0);
}
