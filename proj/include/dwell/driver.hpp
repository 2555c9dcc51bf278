#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dwell/eigensolver.hpp"
#include "dwell/hamiltonian.hpp"
#include "dwell/oracle.hpp"
#include "dwell/reference_data.hpp"

namespace dwell {

enum class ParityChoice { even, odd, both };

inline std::string to_string(ParityChoice c) {
  switch (c) {
    case ParityChoice::even: return "even";
    case ParityChoice::odd: return "odd";
    default: return "both";
  }
}

/// One convergence study: a model, a frequency (fixed or auto-selected by
/// trace stationarity with M diagonal terms), and a ladder of basis sizes.
struct ModelConfig {
  std::string name;
  EvenPolynomialPotential potential{std::vector<double>{0.0, 1.0}};
  std::optional<double> omega;  // absent means auto-select
  std::size_t m = 10;
  std::vector<std::size_t> n_list = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
  ParityChoice parity = ParityChoice::both;
  bool report_halved = false;

  void validate() const {
    if (name.empty()) throw std::invalid_argument("ModelConfig: empty name");
    if (n_list.empty()) throw std::invalid_argument("ModelConfig: empty N list");
    if (n_list.front() < 4)
      throw std::invalid_argument("ModelConfig: smallest N must be >= 4");
    for (std::size_t i = 1; i < n_list.size(); ++i)
      if (n_list[i] <= n_list[i - 1])
        throw std::invalid_argument("ModelConfig: N list must be strictly increasing");
    if (omega && !(*omega > 0.0))
      throw std::invalid_argument("ModelConfig: omega must be > 0");
  }
};

constexpr std::size_t kTableStates = 4;  // states per table, as published

struct TableRow {
  std::size_t n = 0;
  std::array<double, kTableStates> values{};
};

/// Lowest-state eigenvalues of one parity block across the N ladder.
/// `monotone` reports the column check (non-increasing up to 1e-10 slack);
/// `converged` marks columns whose last two rows agree to 1e-7 relative.
/// A non-empty `error` means the study stopped early and rows are partial.
struct ConvergenceTable {
  std::string model;
  Parity parity = Parity::even;
  double omega = 0.0;
  bool omega_auto = false;
  std::size_t m = 10;
  bool report_halved = false;
  std::array<std::string, kTableStates> state_labels;
  std::vector<TableRow> rows;
  std::array<bool, kTableStates> converged{};
  bool monotone = true;
  std::string error;

  const TableRow& last_row() const { return rows.back(); }
};

inline std::array<std::string, kTableStates> state_labels_for(Parity parity) {
  if (parity == Parity::even) return {"E0", "E2", "E4", "E6"};
  return {"E1", "E3", "E5", "E7"};
}

inline std::vector<Parity> parities_of(ParityChoice c) {
  switch (c) {
    case ParityChoice::even: return {Parity::even};
    case ParityChoice::odd: return {Parity::odd};
    default: return {Parity::even, Parity::odd};
  }
}

/// Assemble + diagonalize across the requested N ladder, one table per
/// parity. The frequency is resolved once up front.
inline std::vector<ConvergenceTable> run_convergence(const ModelConfig& cfg) {
  cfg.validate();
  const bool auto_omega = !cfg.omega.has_value();
  const double omega =
      auto_omega ? static_cast<double>(omega_select(cfg.potential, cfg.m))
                 : *cfg.omega;

  std::vector<ConvergenceTable> tables;
  for (Parity parity : parities_of(cfg.parity)) {
    ConvergenceTable table;
    table.model = cfg.name;
    table.parity = parity;
    table.omega = omega;
    table.omega_auto = auto_omega;
    table.m = cfg.m;
    table.report_halved = cfg.report_halved;
    table.state_labels = state_labels_for(parity);
    try {
      for (std::size_t n : cfg.n_list) {
        const auto sol = eigh(assemble<long double>(cfg.potential, omega, n, parity));
        TableRow row{n, {}};
        for (std::size_t s = 0; s < kTableStates; ++s)
          row.values[s] = sol.eigenvalues[s];
        table.rows.push_back(row);
      }
    } catch (const std::exception& ex) {
      table.error = ex.what();  // partial result, rows built so far stand
    }
    for (std::size_t s = 0; s < kTableStates; ++s) {
      for (std::size_t r = 1; r < table.rows.size(); ++r)
        if (table.rows[r].values[s] > table.rows[r - 1].values[s] + 1e-10)
          table.monotone = false;
      table.converged[s] =
          table.rows.size() >= 2 &&
          std::abs(table.rows.back().values[s] -
                   table.rows[table.rows.size() - 2].values[s]) <=
              1e-7 * (1.0 + std::abs(table.rows.back().values[s]));
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

/// Independent cross-check values: Richardson-extrapolated finite-difference
/// eigenvalues of the full spectrum, split by the even/odd alternation of
/// 1D bound states. count is per parity.
struct OracleColumn {
  double half_width = 0.0;
  std::vector<double> even_states;
  std::vector<double> odd_states;
};

inline OracleColumn oracle_column(const EvenPolynomialPotential& p,
                                  std::size_t count_per_parity = kTableStates,
                                  std::size_t n_points = 8001) {
  OracleColumn out;
  out.half_width = default_half_width(p);
  GridSpec coarse{out.half_width, n_points, 2 * count_per_parity};
  GridSpec fine{out.half_width, halved_step_points(n_points), 2 * count_per_parity};
  const auto extrapolated = richardson(fd_spectrum(p, coarse).eigenvalues,
                                       fd_spectrum(p, fine).eigenvalues);
  for (std::size_t i = 0; i < extrapolated.size(); ++i)
    (i % 2 == 0 ? out.even_states : out.odd_states).push_back(extrapolated[i]);
  return out;
}

/// Per-state comparison of a converged table against the published data.
struct StateComparison {
  std::string label;
  double computed = 0.0;               // converged value from our table
  std::optional<double> reference_rrvm;
  std::optional<double> rrvm_abs_diff;
  bool rrvm_matches_printed = false;
  std::optional<double> ssqmgs_reported;  // as published (maybe lambda)
  std::optional<double> ssqmgs_energy;    // converted to E
  std::optional<double> ssqmgs_delta;     // ssqmgs_energy - computed
  bool bound_violation = false;
  std::optional<double> oracle_value;
  std::optional<double> oracle_abs_diff;
};

struct ComparisonReport {
  std::string model;
  Parity parity = Parity::even;
  std::vector<StateComparison> states;
  std::vector<std::string> absent;  // references the source never published
  bool any_violation = false;
};

/// Compare the table's converged row with the published converged values and
/// the SSQMGS eigenvalues. Half-energy references are doubled before any
/// comparison; values published below the converged variational eigenvalue
/// by more than 1e-5 are flagged as bound violations.
inline ComparisonReport compare_reference(const ConvergenceTable& table,
                                          const ReferenceSet& refs,
                                          const OracleColumn* oracle = nullptr) {
  if (table.rows.empty())
    throw std::invalid_argument("compare_reference: empty table");
  ComparisonReport report;
  report.model = table.model;
  report.parity = table.parity;
  const auto& ours = table.last_row().values;
  const std::vector<double>* oracle_states = nullptr;
  if (oracle)
    oracle_states = table.parity == Parity::even ? &oracle->even_states
                                                 : &oracle->odd_states;
  for (std::size_t s = 0; s < kTableStates; ++s) {
    StateComparison cmp;
    cmp.label = table.state_labels[s];
    cmp.computed = ours[s];
    if (refs.rrvm && s < refs.rrvm->last_row().values.size()) {
      const PrintedValue& pv = refs.rrvm->last_row().values[s];
      cmp.reference_rrvm = pv.value;
      cmp.rrvm_abs_diff = std::abs(cmp.computed - pv.value);
      cmp.rrvm_matches_printed = pv.matches(cmp.computed);
    }
    if (refs.ssqmgs) {
      const auto& entry = refs.ssqmgs->values[s];
      if (entry) {
        cmp.ssqmgs_reported = entry->value;
        const double factor =
            refs.ssqmgs->convention == EnergyConvention::half_energy ? 2.0 : 1.0;
        cmp.ssqmgs_energy = entry->value * factor;
        cmp.ssqmgs_delta = *cmp.ssqmgs_energy - cmp.computed;
        cmp.bound_violation = *cmp.ssqmgs_energy < cmp.computed - 1e-5;
        report.any_violation = report.any_violation || cmp.bound_violation;
      } else {
        report.absent.push_back(cmp.label);
      }
    }
    if (oracle_states && s < oracle_states->size()) {
      cmp.oracle_value = (*oracle_states)[s];
      cmp.oracle_abs_diff = std::abs(cmp.computed - *cmp.oracle_value);
    }
    report.states.push_back(std::move(cmp));
  }
  return report;
}

}  // namespace dwell
