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

#include "wzd/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "wzd/errors.hpp"
#include "wzd/ring_oracle.hpp"

namespace wzd {
namespace {

using nlohmann::json;

constexpr double kAuditFlagThreshold = 1e-6;

std::string format_real(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

bool is_prime(const Factorization& f) {
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

const char* to_string(ClassKind kind) {
  return kind == ClassKind::Complete ? "complete" : "independent";
}

ClassKind class_kind_from(const std::string& s) {
  if (s == "complete") return ClassKind::Complete;
  if (s == "independent") return ClassKind::Independent;
  throw std::invalid_argument("unknown class kind: " + s);
}

FormulaCase formula_case_from(const std::string& s) {
  for (FormulaCase c :
       {FormulaCase::CompleteCase, FormulaCase::GeneralCase,
        FormulaCase::PkQCorollary, FormulaCase::PqrCorollary,
        FormulaCase::NotApplicable}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown formula case: " + s);
}

EnergyCase energy_case_from(const std::string& s) {
  for (EnergyCase c : {EnergyCase::Pk, EnergyCase::PkQ, EnergyCase::None}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown energy case: " + s);
}

json optional_to_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}
json optional_to_json(const std::optional<bool>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json index_to_json(const IndexReport& r) {
  return json{{"n", r.n},
              {"so_direct", r.so_direct},
              {"so_compressed", r.so_compressed},
              {"so_formula", optional_to_json(r.so_formula)},
              {"formula_case", to_string(r.formula_case)},
              {"rel_delta_formula", optional_to_json(r.rel_delta_formula)},
              {"formula_terms",
               json{r.formula_terms[0], r.formula_terms[1],
                    r.formula_terms[2]}}};
}

IndexReport index_from_json(const json& j) {
  IndexReport r;
  r.n = j.at("n").get<std::int64_t>();
  r.so_direct = j.at("so_direct").get<double>();
  r.so_compressed = j.at("so_compressed").get<double>();
  r.so_formula = optional_from_json<double>(j.at("so_formula"));
  r.formula_case = formula_case_from(j.at("formula_case").get<std::string>());
  r.rel_delta_formula = optional_from_json<double>(j.at("rel_delta_formula"));
  for (int i = 0; i < 3; ++i) {
    r.formula_terms[i] = j.at("formula_terms").at(i).get<double>();
  }
  return r;
}

json spectrum_to_json(const SpectrumRecord& r) {
  json pairs = json::array();
  for (const EigenvaluePair& p : r.spectrum.pairs) {
    pairs.push_back(json{p.value, p.multiplicity});
  }
  return json{{"source", r.source},
              {"match", optional_to_json(r.match)},
              {"cluster_tolerance", r.spectrum.cluster_tolerance},
              {"pairs", pairs}};
}

SpectrumRecord spectrum_from_json(const json& j) {
  SpectrumRecord r;
  r.source = j.at("source").get<std::string>();
  r.match = optional_from_json<bool>(j.at("match"));
  r.spectrum.cluster_tolerance = j.at("cluster_tolerance").get<double>();
  for (const json& p : j.at("pairs")) {
    r.spectrum.pairs.push_back(
        {p.at(0).get<double>(), p.at(1).get<std::int64_t>()});
  }
  return r;
}

json energy_to_json(const EnergyReport& r) {
  return json{{"n", r.n},
              {"energy", r.energy},
              {"lower_bound", r.lower_bound},
              {"closed_form", optional_to_json(r.closed_form)},
              {"closed_form_case", to_string(r.closed_form_case)}};
}

EnergyReport energy_from_json(const json& j) {
  EnergyReport r;
  r.n = j.at("n").get<std::int64_t>();
  r.energy = j.at("energy").get<double>();
  r.lower_bound = j.at("lower_bound").get<double>();
  r.closed_form = optional_from_json<double>(j.at("closed_form"));
  r.closed_form_case =
      energy_case_from(j.at("closed_form_case").get<std::string>());
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string escaped = "\"";
  for (char c : value) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  escaped += '"';
  return escaped;
}

}  // namespace

AnalysisRecord analyze(std::int64_t n, const AnalyzeOptions& options) {
  if (n < 2) throw std::invalid_argument("analyze: n must be >= 2");

  AnalysisRecord record;
  record.n = n;
  record.factorization = factorize(n);

  const CompressedGraph compressed = build_compressed(n);
  record.trivial = compressed.partition.trivial;
  record.classes = compressed.partition.classes;

  if (record.trivial) {
    record.method = "structural";
    record.index.n = n;
    record.energy.n = n;
    const SpectrumMode mode = options.spectrum.value_or(SpectrumMode::Both);
    record.spectrum.source = mode == SpectrumMode::Full        ? "full"
                             : mode == SpectrumMode::Quotient ? "theoretical"
                                                              : "both";
    record.spectrum.spectrum.cluster_tolerance = kDefaultEigTol;
    if (mode == SpectrumMode::Both) record.spectrum.match = true;
    return record;
  }

  const Method method =
      options.method.value_or(n <= 300 ? Method::Both : Method::Structural);
  DenseGraph dense;
  switch (method) {
    case Method::Structural:
      dense = expand(compressed);
      record.method = "structural";
      break;
    case Method::Oracle:
      dense = build_dense_oracle(n);
      record.method = "oracle";
      break;
    case Method::Both: {
      dense = expand(compressed);
      record.oracle_match = dense.same_graph(build_dense_oracle(n));
      record.method = "both";
      break;
    }
  }
  record.num_vertices = dense.order();
  record.num_edges = dense.edge_count();
  record.index = index_report(n, dense, compressed);

  const SpectrumMode mode = options.spectrum.value_or(
      dense.order() <= kEigOrderGuard ? SpectrumMode::Both
                                      : SpectrumMode::Quotient);
  switch (mode) {
    case SpectrumMode::Full:
      record.spectrum = {"full", std::nullopt, spectrum_of(dense)};
      break;
    case SpectrumMode::Quotient:
      record.spectrum = {"theoretical", std::nullopt, spectrum_theoretical(n)};
      break;
    case SpectrumMode::Both: {
      Spectrum full = spectrum_of(dense);
      const Spectrum theoretical = spectrum_theoretical(n);
      const double tol =
          kSpectrumMatchTol *
          std::max(1.0, frobenius_from_degrees(compressed));
      const bool match = multiset_match(full, theoretical, tol);
      record.spectrum = {"both", match, std::move(full)};
      break;
    }
  }

  record.energy = energy_report(n, compressed, record.spectrum.spectrum);
  record.audit_findings = audit_findings(n, compressed, record.index,
                                         record.spectrum.spectrum,
                                         record.energy);
  return record;
}

nlohmann::json to_json(const AnalysisRecord& record) {
  json factors = json::array();
  for (const PrimePower& f : record.factorization.factors) {
    factors.push_back(json{f.prime, f.exponent});
  }
  json classes = json::array();
  for (const ClassInfo& c : record.classes) {
    classes.push_back(json{{"divisor", c.divisor},
                           {"size", c.size},
                           {"kind", to_string(c.kind)},
                           {"degree", c.degree}});
  }
  json findings = json::array();
  for (const AuditFinding& f : record.audit_findings) {
    findings.push_back(json{{"claim_id", f.claim_id},
                            {"printed_value", f.printed_value},
                            {"computed_value", f.computed_value},
                            {"abs_delta", f.abs_delta}});
  }
  return json{{"n", record.n},
              {"factorization", factors},
              {"trivial", record.trivial},
              {"num_vertices", record.num_vertices},
              {"num_edges", record.num_edges},
              {"classes", classes},
              {"method", record.method},
              {"oracle_match", optional_to_json(record.oracle_match)},
              {"index", index_to_json(record.index)},
              {"spectrum", spectrum_to_json(record.spectrum)},
              {"energy", energy_to_json(record.energy)},
              {"audit_findings", findings}};
}

AnalysisRecord record_from_json(const nlohmann::json& j) {
  AnalysisRecord record;
  record.n = j.at("n").get<std::int64_t>();
  record.factorization.n = record.n;
  for (const json& f : j.at("factorization")) {
    record.factorization.factors.push_back(
        {f.at(0).get<std::int64_t>(), f.at(1).get<int>()});
  }
  record.trivial = j.at("trivial").get<bool>();
  record.num_vertices = j.at("num_vertices").get<std::int64_t>();
  record.num_edges = j.at("num_edges").get<std::int64_t>();
  for (const json& c : j.at("classes")) {
    record.classes.push_back(
        {c.at("divisor").get<std::int64_t>(), c.at("size").get<std::int64_t>(),
         class_kind_from(c.at("kind").get<std::string>()),
         c.at("degree").get<std::int64_t>()});
  }
  record.method = j.at("method").get<std::string>();
  record.oracle_match = optional_from_json<bool>(j.at("oracle_match"));
  record.index = index_from_json(j.at("index"));
  record.spectrum = spectrum_from_json(j.at("spectrum"));
  record.energy = energy_from_json(j.at("energy"));
  for (const json& f : j.at("audit_findings")) {
    record.audit_findings.push_back({f.at("claim_id").get<std::string>(),
                                     f.at("printed_value").get<double>(),
                                     f.at("computed_value").get<double>(),
                                     f.at("abs_delta").get<double>()});
  }
  return record;
}

std::string to_text(const AnalysisRecord& record) {
  std::ostringstream out;
  out << "n = " << record.n << " = ";
  for (std::size_t i = 0; i < record.factorization.factors.size(); ++i) {
    const PrimePower& f = record.factorization.factors[i];
    if (i > 0) out << " * ";
    out << f.prime;
    if (f.exponent > 1) out << "^" << f.exponent;
  }
  out << "\n";
  if (record.trivial) {
    out << "null graph: no nonzero zero-divisors beyond units (n prime)\n";
    return out.str();
  }

  out << "vertices: " << record.num_vertices
      << "  edges: " << record.num_edges << "  method: " << record.method;
  if (record.oracle_match) {
    out << "  oracle_match: " << (*record.oracle_match ? "yes" : "no");
  }
  out << "\nclasses:\n";
  for (const ClassInfo& c : record.classes) {
    out << "  d=" << c.divisor << ": size " << c.size << ", "
        << to_string(c.kind) << ", degree " << c.degree << "\n";
  }

  out << "sombor index:\n";
  out << "  direct     " << format_real(record.index.so_direct) << "\n";
  out << "  compressed " << format_real(record.index.so_compressed) << "\n";
  if (record.index.so_formula) {
    out << "  closed     " << format_real(*record.index.so_formula) << " ("
        << to_string(record.index.formula_case) << ", rel delta "
        << format_real(*record.index.rel_delta_formula) << ")\n";
  }

  out << "spectrum (" << record.spectrum.source;
  if (record.spectrum.match) {
    out << ", multiset match: " << (*record.spectrum.match ? "yes" : "no");
  }
  out << "):\n";
  for (const EigenvaluePair& p : record.spectrum.spectrum.pairs) {
    out << "  " << format_real(p.value) << "  x" << p.multiplicity << "\n";
  }

  out << "energy: " << format_real(record.energy.energy) << "  (lower bound "
      << format_real(record.energy.lower_bound);
  if (record.energy.closed_form) {
    out << ", published closed form " << format_real(*record.energy.closed_form)
        << " [" << to_string(record.energy.closed_form_case) << "]";
  }
  out << ")\n";

  if (record.audit_findings.empty()) {
    out << "audit findings: none\n";
  } else {
    out << "audit findings:\n";
    for (const AuditFinding& f : record.audit_findings) {
      out << "  " << f.claim_id << ": printed "
          << format_real(f.printed_value) << ", computed "
          << format_real(f.computed_value) << ", |delta| "
          << format_real(f.abs_delta) << "\n";
    }
  }
  return out.str();
}

std::int64_t audit_flag_count(const std::vector<AuditFinding>& findings) {
  std::int64_t count = 0;
  for (const AuditFinding& f : findings) {
    if (f.abs_delta > kAuditFlagThreshold) ++count;
  }
  return count;
}

void write_sweep_csv(std::ostream& out, std::int64_t from, std::int64_t to,
                     const SweepOptions& options) {
  if (from < 2 || from > to) {
    throw std::invalid_argument("sweep: need 2 <= from <= to");
  }

  const std::size_t count = static_cast<std::size_t>(to - from + 1);
  std::vector<std::string> lines(count);

  std::atomic<std::size_t> cursor{0};
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  auto work = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < count;
         i = cursor.fetch_add(1)) {
      const std::int64_t n = from + static_cast<std::int64_t>(i);
      std::ostringstream row;
      try {
        const AnalysisRecord rec = analyze(n, options.analyze);
        if (rec.trivial) {
          row << "# n=" << n << " skipped: prime (null graph)\n";
        } else {
          row << n << "," << rec.num_vertices << "," << rec.num_edges << ","
              << format_real(rec.index.so_direct) << ","
              << (rec.index.so_formula ? format_real(*rec.index.so_formula)
                                       : std::string())
              << "," << to_string(rec.index.formula_case) << ","
              << (rec.index.rel_delta_formula
                      ? format_real(*rec.index.rel_delta_formula)
                      : std::string())
              << "," << format_real(rec.energy.energy) << ","
              << format_real(rec.energy.lower_bound) << ","
              << (rec.spectrum.match ? (*rec.spectrum.match ? "true" : "false")
                                     : "na")
              << "," << audit_flag_count(rec.audit_findings) << ",\n";
          if (options.audit) {
            for (const AuditFinding& f : rec.audit_findings) {
              row << "# audit n=" << n << " " << f.claim_id << " printed="
                  << format_real(f.printed_value)
                  << " computed=" << format_real(f.computed_value)
                  << " delta=" << format_real(f.abs_delta) << "\n";
            }
          }
        }
      } catch (const std::exception& e) {
        row.str("");
        row << n << ",,,,,,,,,,," << csv_escape(e.what()) << "\n";
      }
      lines[i] = row.str();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  if (options.timestamp) out << "# generated " << utc_timestamp() << "\n";
  out << "n,N,edges,so_direct,so_formula,formula_case,rel_delta,energy,"
         "lower_bound,spectrum_match,audit_flag_count,error\n";
  for (const std::string& line : lines) out << line;
}

std::string export_dot(std::int64_t n) {
  const CompressedGraph g = build_compressed(n);
  if (g.partition.trivial) {
    throw std::invalid_argument("export: n must be composite");
  }
  return to_dot(g);
}

std::string export_matrix(std::int64_t n) {
  const CompressedGraph g = build_compressed(n);
  if (g.partition.trivial) {
    throw std::invalid_argument("export: n must be composite");
  }
  return matrix_triplets(expand(g));
}

}  // namespace wzd
