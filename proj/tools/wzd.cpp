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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "wzd/analysis.hpp"
#include "wzd/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitNumeric = 4;

std::optional<wzd::Method> parse_method(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "structural") return wzd::Method::Structural;
  if (s == "oracle") return wzd::Method::Oracle;
  return wzd::Method::Both;
}

std::optional<wzd::SpectrumMode> parse_spectrum(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "full") return wzd::SpectrumMode::Full;
  if (s == "quotient") return wzd::SpectrumMode::Quotient;
  return wzd::SpectrumMode::Both;
}

// Relative output paths land in $WZD_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("WZD_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return std::string(dir) + "/" + path;
}

void report_error(const std::string& message, int code, bool as_json) {
  if (as_json) {
    nlohmann::json error{{"error", {{"code", code}, {"message", message}}}};
    std::cout << error.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weakly zero-divisor graphs of Z_n: Sombor index, spectrum, energy, "
      "and an audit of published closed forms"};
  app.require_subcommand(1);

  std::int64_t analyze_n = 0;
  std::string method_name;
  std::string spectrum_name;
  bool as_json = false;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "Full pipeline for a single modulus");
  cmd_analyze->add_option("n", analyze_n, "modulus (n >= 2)")->required();
  cmd_analyze->add_option("--method", method_name,
                          "graph construction: structural|oracle|both "
                          "(default: both for n <= 300)")
      ->check(CLI::IsMember({"structural", "oracle", "both"}));
  cmd_analyze->add_option("--spectrum", spectrum_name,
                          "spectrum route: full|quotient|both "
                          "(default: both within the dense guards)")
      ->check(CLI::IsMember({"full", "quotient", "both"}));
  cmd_analyze->add_flag("--json", as_json, "emit the record as JSON");

  std::int64_t sweep_from = 0;
  std::int64_t sweep_to = 0;
  bool sweep_audit = false;
  bool no_timestamp = false;
  std::string sweep_out;
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "CSV over a range of moduli");
  cmd_sweep->add_option("--from", sweep_from, "first modulus")->required();
  cmd_sweep->add_option("--to", sweep_to, "last modulus")->required();
  cmd_sweep->add_flag("--audit", sweep_audit,
                      "emit per-finding audit comment lines");
  cmd_sweep->add_flag("--no-timestamp", no_timestamp,
                      "suppress the generated-at header line");
  cmd_sweep->add_option("--out", sweep_out, "output file (default: stdout)");

  std::int64_t export_n = 0;
  std::string export_kind;
  std::string export_out;
  CLI::App* cmd_export =
      app.add_subcommand("export", "Write the graph (dot) or Sombor matrix");
  cmd_export->add_option("n", export_n, "modulus (composite)")->required();
  cmd_export->add_option("--kind", export_kind, "dot|matrix")
      ->required()
      ->check(CLI::IsMember({"dot", "matrix"}));
  cmd_export->add_option("--out", export_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_analyze->parsed()) {
      wzd::AnalyzeOptions options;
      options.method = parse_method(method_name);
      options.spectrum = parse_spectrum(spectrum_name);
      const wzd::AnalysisRecord record = wzd::analyze(analyze_n, options);
      if (as_json) {
        std::cout << wzd::to_json(record).dump(2) << "\n";
      } else {
        std::cout << wzd::to_text(record);
      }
    } else if (cmd_sweep->parsed()) {
      wzd::SweepOptions options;
      options.audit = sweep_audit;
      options.timestamp = !no_timestamp;
      if (sweep_out.empty()) {
        wzd::write_sweep_csv(std::cout, sweep_from, sweep_to, options);
      } else {
        const std::string path = resolve_out(sweep_out);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path);
        wzd::write_sweep_csv(out, sweep_from, sweep_to, options);
        if (!out.good()) throw std::runtime_error("write failed: " + path);
      }
    } else if (cmd_export->parsed()) {
      const std::string content = export_kind == "dot"
                                      ? wzd::export_dot(export_n)
                                      : wzd::export_matrix(export_n);
      const std::string path = resolve_out(export_out);
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open for writing: " + path);
      out << content;
      if (!out.good()) throw std::runtime_error("write failed: " + path);
    }
    return 0;
  } catch (const wzd::GuardError& e) {
    report_error(e.what(), kExitGuard, as_json);
    return kExitGuard;
  } catch (const wzd::NumericError& e) {
    report_error(e.what(), kExitNumeric, as_json);
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    report_error(e.what(), kExitUsage, as_json);
    return kExitUsage;
  } catch (const std::logic_error& e) {
    report_error(e.what(), kExitNumeric, as_json);
    return kExitNumeric;
  } catch (const std::exception& e) {
    report_error(e.what(), 1, as_json);
    return 1;
  }
}
