// Command-line driver: run convergence studies from a JSON config, compare
// against the published reference data, optionally cross-check with the
// finite-difference oracle, and emit CSV or JSON reports.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwell/dwell.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_command(const std::string& config_path, const std::string& format,
                const std::string& out_dir, const std::string& model_filter,
                bool with_oracle, bool strict) {
  auto configs = dwell::load_config(config_path);
  if (!model_filter.empty()) {
    const auto wanted = split_csv(model_filter);
    std::erase_if(configs, [&](const dwell::ModelConfig& c) {
      return std::find(wanted.begin(), wanted.end(), c.name) == wanted.end();
    });
    if (configs.empty()) {
      std::cerr << "dwell: no configured model matches --models " << model_filter
                << "\n";
      return 1;
    }
  }

  std::vector<dwell::ConvergenceTable> tables;
  std::vector<dwell::ComparisonReport> comparisons;
  bool any_violation = false;

  for (const auto& cfg : configs) {
    auto model_tables = dwell::run_convergence(cfg);
    std::optional<dwell::OracleColumn> oracle;
    if (with_oracle) oracle = dwell::oracle_column(cfg.potential);
    for (auto& table : model_tables) {
      const auto refs = dwell::reference_set_for(cfg.potential, table.parity);
      if (refs.rrvm || refs.ssqmgs || oracle) {
        auto cmp = dwell::compare_reference(table, refs,
                                            oracle ? &*oracle : nullptr);
        any_violation = any_violation || cmp.any_violation;
        comparisons.push_back(std::move(cmp));
      }
      tables.push_back(std::move(table));
    }
  }

  const auto fmt = format == "csv" ? dwell::ReportFormat::csv
                                   : dwell::ReportFormat::json;
  const auto files = dwell::emit_report(tables, comparisons, fmt, out_dir);

  for (const auto& t : tables) {
    std::cout << t.model << " " << dwell::to_string(t.parity)
              << " omega=" << t.omega << (t.omega_auto ? " (auto)" : "")
              << " N=" << (t.rows.empty() ? 0 : t.rows.back().n) << " converged:";
    char buf[32];
    for (double v : t.rows.empty() ? dwell::TableRow{}.values
                                   : t.rows.back().values) {
      std::snprintf(buf, sizeof(buf), " %.10g", v);
      std::cout << buf;
    }
    if (!t.monotone) std::cout << "  [non-monotone column]";
    if (!t.error.empty()) std::cout << "  [partial: " << t.error << "]";
    std::cout << "\n";
  }
  for (const auto& c : comparisons) {
    std::vector<std::string> flagged;
    for (const auto& s : c.states)
      if (s.bound_violation) flagged.push_back(s.label);
    if (!flagged.empty()) {
      std::cout << c.model << " " << dwell::to_string(c.parity)
                << " bound violations:";
      for (const auto& l : flagged) std::cout << " " << l;
      std::cout << "\n";
    }
  }
  std::cout << "wrote " << files.size() << " file(s) to " << out_dir << "\n";

  return (strict && any_violation) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational spectra of even-polynomial double-well oscillators"};
  app.footer("The DWELL_SEED environment variable is ignored: every "
             "computation is deterministic.");
  app.require_subcommand(1);

  std::string config_path, format = "json", out_dir = "out", models;
  bool with_oracle = false, strict = false;

  auto* run = app.add_subcommand("run", "run convergence studies from a config");
  run->add_option("config", config_path, "JSON configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--format", format, "report format (default json)")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", out_dir, "output directory (default ./out)");
  run->add_option("--models", models, "comma-separated model-name filter");
  run->add_flag("--oracle", with_oracle,
                "append finite-difference cross-check columns");
  run->add_flag("--strict", strict, "exit 2 when any bound violation is flagged");

  CLI11_PARSE(app, argc, argv);

  try {
    return run_command(config_path, format, out_dir, models, with_oracle, strict);
  } catch (const std::exception& ex) {
    std::cerr << "dwell: " << ex.what() << "\n";
    return 1;
  }
}
