#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "dwell/driver.hpp"

namespace dwell {

enum class ReportFormat { csv, json };

namespace report_detail {

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// RFC-4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path.string());
  out << body;
  if (!out) throw std::runtime_error("emit_report: write failed for " + path.string());
}

inline std::string table_csv(const ConvergenceTable& t) {
  std::string body = "N";
  for (const auto& label : t.state_labels) body += "," + csv_field(label);
  body += "\n";
  for (const auto& row : t.rows) {
    body += std::to_string(row.n);
    for (double v : row.values) body += "," + format_double(v);
    body += "\n";
  }
  if (t.report_halved && !t.rows.empty()) {
    body += "lambda";
    for (double v : t.last_row().values) body += "," + format_double(v / 2.0);
    body += "\n";
  }
  return body;
}

inline std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

inline std::string comparison_csv(const ComparisonReport& c) {
  std::string body =
      "state,computed,reference_rrvm,rrvm_abs_diff,ssqmgs,ssqmgs_energy,"
      "ssqmgs_delta,bound_violation,oracle,oracle_abs_diff\n";
  for (const auto& s : c.states) {
    body += csv_field(s.label) + "," + format_double(s.computed) + "," +
            opt_field(s.reference_rrvm) + "," + opt_field(s.rrvm_abs_diff) + "," +
            opt_field(s.ssqmgs_reported) + "," + opt_field(s.ssqmgs_energy) + "," +
            opt_field(s.ssqmgs_delta) + "," +
            (s.bound_violation ? "true" : "false") + "," +
            opt_field(s.oracle_value) + "," + opt_field(s.oracle_abs_diff) + "\n";
  }
  return body;
}

inline nlohmann::ordered_json table_json(const ConvergenceTable& t) {
  nlohmann::ordered_json j;
  j["model"] = t.model;
  j["parity"] = to_string(t.parity);
  j["omega"] = t.omega;
  j["omega_mode"] = t.omega_auto ? "auto" : "fixed";
  j["M"] = t.m;
  j["states"] = t.state_labels;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["N"] = row.n;
    r["E"] = row.values;
    j["rows"].push_back(r);
  }
  j["converged"] = t.converged;
  j["monotone"] = t.monotone;
  if (t.report_halved && !t.rows.empty()) {
    auto halved = t.last_row().values;
    for (double& v : halved) v /= 2.0;
    j["halved_converged"] = halved;
  }
  if (!t.error.empty()) j["error"] = t.error;
  return j;
}

inline nlohmann::ordered_json comparison_json(const ComparisonReport& c) {
  nlohmann::ordered_json j;
  j["model"] = c.model;
  j["parity"] = to_string(c.parity);
  j["any_violation"] = c.any_violation;
  if (!c.absent.empty()) j["absent"] = c.absent;
  j["states"] = nlohmann::ordered_json::array();
  for (const auto& s : c.states) {
    nlohmann::ordered_json e;
    e["state"] = s.label;
    e["computed"] = s.computed;
    if (s.reference_rrvm) {
      e["reference_rrvm"] = *s.reference_rrvm;
      e["rrvm_abs_diff"] = *s.rrvm_abs_diff;
      e["rrvm_matches_printed"] = s.rrvm_matches_printed;
    }
    if (s.ssqmgs_reported) {
      e["ssqmgs"] = *s.ssqmgs_reported;
      e["ssqmgs_energy"] = *s.ssqmgs_energy;
      e["ssqmgs_delta"] = *s.ssqmgs_delta;
      e["bound_violation"] = s.bound_violation;
    }
    if (s.oracle_value) {
      e["oracle"] = *s.oracle_value;
      e["oracle_abs_diff"] = *s.oracle_abs_diff;
    }
    j["states"].push_back(e);
  }
  return j;
}

}  // namespace report_detail

/// Write tables (and comparisons, matched by model/parity) under `dest`.
/// CSV mirrors the published table layout: the N column, then the state
/// columns. JSON is a single lossless report. A manifest.json listing the
/// emitted files is always produced; output is byte-stable for identical
/// inputs.
inline std::vector<std::filesystem::path> emit_report(
    const std::vector<ConvergenceTable>& tables,
    const std::vector<ComparisonReport>& comparisons, ReportFormat format,
    const std::filesystem::path& dest) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dest, ec);
  if (ec)
    throw std::runtime_error("emit_report: cannot create " + dest.string() +
                             ": " + ec.message());
  std::vector<fs::path> written;
  const auto emit = [&](const fs::path& p, const std::string& body) {
    report_detail::write_file(p, body);
    written.push_back(p);
  };

  if (format == ReportFormat::csv) {
    for (const auto& t : tables)
      emit(dest / (t.model + "_" + to_string(t.parity) + ".csv"),
           report_detail::table_csv(t));
    for (const auto& c : comparisons)
      emit(dest / (c.model + "_" + to_string(c.parity) + "_comparison.csv"),
           report_detail::comparison_csv(c));
  } else {
    nlohmann::ordered_json root;
    root["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables)
      root["tables"].push_back(report_detail::table_json(t));
    root["comparisons"] = nlohmann::ordered_json::array();
    for (const auto& c : comparisons)
      root["comparisons"].push_back(report_detail::comparison_json(c));
    emit(dest / "report.json", root.dump(2) + "\n");
  }

  nlohmann::ordered_json manifest;
  manifest["files"] = nlohmann::ordered_json::array();
  for (const auto& p : written) manifest["files"].push_back(p.filename().string());
  report_detail::write_file(dest / "manifest.json", manifest.dump(2) + "\n");
  written.push_back(dest / "manifest.json");
  return written;
}

}  // namespace dwell
