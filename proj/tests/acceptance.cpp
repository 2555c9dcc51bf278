// Acceptance suite: one check per published-result criterion, one PASS/FAIL
// line each. Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dwell/dwell.hpp"

namespace {

using dwell::assemble;
using dwell::eigh;
using dwell::EvenPolynomialPotential;
using dwell::Parity;

const EvenPolynomialPotential kModel1({1.0, -2.0, -2.0, 1.0});
const EvenPolynomialPotential kModel2({0.0, -26.0, 6.0, 1.0});
const EvenPolynomialPotential kModel3({0.0, 1.5, -2.5, 0.25, -0.5, 0.25});

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& out) : out_(out) {}

  void require(bool ok, const std::string& what) {
    if (ok) return;
    out_.pass = false;
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += what;
  }

  void within(double got, double want, double tol, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want << " +- " << tol;
    require(std::abs(got - want) <= tol, msg.str());
  }

  /// agreement at the printed precision of the reference text
  void printed(double got, const std::string& text, const std::string& what) {
    const auto pv = dwell::parse_printed(text);
    std::ostringstream msg;
    msg << what << ": got " << got << ", printed " << text;
    require(pv.matches(got), msg.str());
  }

 private:
  Outcome& out_;
};

std::vector<double> merged_lowest(const EvenPolynomialPotential& p, double omega,
                                  std::size_t n, std::size_t count) {
  const auto even = eigh(assemble<long double>(p, omega, n, Parity::even));
  const auto odd = eigh(assemble<long double>(p, omega, n, Parity::odd));
  std::vector<double> all;
  all.insert(all.end(), even.eigenvalues.begin(), even.eigenvalues.end());
  all.insert(all.end(), odd.eigenvalues.begin(), odd.eigenvalues.end());
  std::sort(all.begin(), all.end());
  all.resize(count);
  return all;
}

void criterion1(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto even = eigh(assemble<long double>(kModel1, 4.0, 30, Parity::even));
  c.require(std::abs(even.eigenvalues[0]) <= 1e-9, "|E0| <= 1e-9");
  c.printed(even.eigenvalues[1], "4.629826493", "E2");
  c.printed(even.eigenvalues[2], "14.35095078", "E4");
  c.printed(even.eigenvalues[3], "27.5170999", "E6");
  const auto odd = eigh(assemble<long double>(kModel1, 4.0, 30, Parity::odd));
  c.printed(odd.eigenvalues[0], "0.8458892907", "E1");
  c.printed(odd.eigenvalues[1], "9.00755763", "E3");
  c.printed(odd.eigenvalues[2], "20.55577028", "E5");
  c.printed(odd.eigenvalues[3], "35.16839416", "E7");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(seconds < 5.0, "runtime " + std::to_string(seconds) + "s >= 5s");
}

void criterion2(Checker& c) {
  const auto even = eigh(assemble<long double>(kModel2, 5.0, 30, Parity::even));
  c.printed(even.eigenvalues[0], "-14.47165597", "E0");
  c.printed(even.eigenvalues[1], "-2.523911705", "E2");
  c.printed(even.eigenvalues[2], "6.598517524", "E4");
  c.printed(even.eigenvalues[3], "21.60600652", "E6");
  const auto odd = eigh(assemble<long double>(kModel2, 5.0, 30, Parity::odd));
  c.printed(odd.eigenvalues[0], "-14.42794583", "E1");
  c.printed(odd.eigenvalues[1], "-0.6901759952", "E3");
  c.printed(odd.eigenvalues[2], "13.35246119", "E5");
  c.printed(odd.eigenvalues[3], "30.72698222", "E7");
}

void criterion3(Checker& c) {
  const auto even = eigh(assemble<long double>(kModel3, 5.0, 50, Parity::even));
  c.require(std::abs(even.eigenvalues[0]) <= 1e-6, "|E0| <= 1e-6");
  c.printed(even.eigenvalues[1], "4.315694015", "E2");
  c.printed(even.eigenvalues[2], "15.58360319", "E4");
  c.printed(even.eigenvalues[3], "31.54306722", "E6");
  const auto odd = eigh(assemble<long double>(kModel3, 5.0, 50, Parity::odd));
  c.printed(odd.eigenvalues[0], "1.046922091", "E1");
  c.printed(odd.eigenvalues[1], "9.351201519", "E3");
  c.printed(odd.eigenvalues[2], "22.99972568", "E5");
  c.printed(odd.eigenvalues[3], "41.15659323", "E7");
}

void criterion4(Checker& c) {
  const auto even10 = eigh(assemble<long double>(kModel1, 4.0, 10, Parity::even));
  c.printed(even10.eigenvalues[0], "6.6e-6", "model1 even N=10 E0");
  c.printed(even10.eigenvalues[1], "4.62986462", "model1 even N=10 E2");
  c.printed(even10.eigenvalues[2], "14.35154075", "model1 even N=10 E4");
  c.printed(even10.eigenvalues[3], "27.52416887", "model1 even N=10 E6");
  const auto odd5 = eigh(assemble<long double>(kModel2, 5.0, 5, Parity::odd));
  c.printed(odd5.eigenvalues[0], "-14.3640557", "model2 odd N=5 E1");
  c.printed(odd5.eigenvalues[1], "-0.4515691057", "model2 odd N=5 E3");
  c.printed(odd5.eigenvalues[2], "13.89792265", "model2 odd N=5 E5");
  c.printed(odd5.eigenvalues[3], "32.55127969", "model2 odd N=5 E7");
}

void criterion5(Checker& c) {
  std::vector<std::string> flagged;
  for (const auto& bm : dwell::benchmark_models()) {
    dwell::ModelConfig cfg;
    cfg.name = bm.name;
    cfg.potential = bm.potential;
    cfg.omega = bm.omega;
    cfg.n_list = {5, 10, 15, 20, 25, static_cast<std::size_t>(bm.table_n)};
    for (const auto& table : dwell::run_convergence(cfg)) {
      const auto refs = dwell::reference_set_for(bm.potential, table.parity);
      const auto cmp = dwell::compare_reference(table, refs);
      for (const auto& s : cmp.states)
        if (s.bound_violation)
          flagged.push_back(bm.name + "/" + dwell::to_string(table.parity) +
                            "/" + s.label);
    }
  }
  const std::vector<std::string> expected{"model2/even/E4", "model2/even/E6"};
  std::string got;
  for (const auto& f : flagged) got += f + " ";
  c.require(flagged == expected, "violations flagged: " + got);
}

void criterion6(Checker& c) {
  const auto r1 = dwell::qes_residuals(kModel1);
  c.require(std::abs(r1.r1) <= 1e-12, "model1 r1 != 0");
  const auto r2 = dwell::qes_residuals(kModel2);
  c.within(r2.r1, -128.0, 1e-12, "model2 r1");
  const auto r3 = dwell::qes_residuals(kModel3);
  c.require(std::abs(r3.r1) <= 1e-12 && r3.r2 && std::abs(*r3.r2) <= 1e-12,
            "model3 residuals != 0");

  const auto a1 = dwell::solve_ansatz(kModel1);
  c.require(a1.has_value(), "model1 ansatz absent");
  if (a1) {
    c.within(a1->f[1], -0.5, 1e-12, "model1 F1");
    c.within(a1->f[2], 0.25, 1e-12, "model1 F2");
    c.within(a1->e0, 0.0, 1e-12, "model1 E0");
  }
  c.require(!dwell::solve_ansatz(kModel2).has_value(),
            "model2 must have no exact ground state");
  const auto a3 = dwell::solve_ansatz(kModel3);
  c.require(a3.has_value(), "model3 ansatz absent");
  if (a3) {
    c.within(a3->f[1], 0.0, 1e-12, "model3 F1");
    c.within(a3->f[2], -1.0 / 8.0, 1e-12, "model3 F2");
    c.within(a3->f[3], 1.0 / 12.0, 1e-12, "model3 F3");
    c.within(a3->e0, 0.0, 1e-12, "model3 E0");
  }
}

void criterion7(Checker& c) {
  const struct {
    const EvenPolynomialPotential* p;
    double omega;
    const char* name;
  } models[] = {{&kModel1, 4.0, "model1"},
                {&kModel2, 5.0, "model2"},
                {&kModel3, 5.0, "model3"}};

  for (const auto& m : models) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      dwell::EigenSolution prev;
      for (std::size_t n = 5; n <= 50; ++n) {
        auto sol = eigh(assemble<long double>(*m.p, m.omega, n, parity));
        c.require(sol.max_residual <= 1e-10,
                  std::string(m.name) + " residual bound at N=" +
                      std::to_string(n));
        if (n > 5)
          c.require(dwell::interlace_check(prev, sol),
                    std::string(m.name) + "/" + dwell::to_string(parity) +
                        " interlacing broke at N=" + std::to_string(n));
        prev = std::move(sol);
      }
      // full double-precision contract check on the largest block
      const auto block = assemble<long double>(*m.p, m.omega, 50, parity);
      const auto sol = eigh(block);
      double worst_gram = 0.0, worst_resid = 0.0;
      for (std::size_t i = 0; i < 50; ++i) {
        for (std::size_t j = i; j < 50; ++j) {
          double dot = 0.0;
          for (std::size_t r = 0; r < 50; ++r)
            dot += sol.eigenvectors[i][r] * sol.eigenvectors[j][r];
          worst_gram = std::max(worst_gram,
                                std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
        double rss = 0.0;
        for (std::size_t r = 0; r < 50; ++r) {
          double acc = 0.0;
          for (std::size_t col = 0; col < 50; ++col)
            acc += static_cast<double>(block.h(r, col)) * sol.eigenvectors[i][col];
          acc -= sol.eigenvalues[i] * sol.eigenvectors[i][r];
          rss += acc * acc;
        }
        worst_resid = std::max(
            worst_resid, std::sqrt(rss) / (1.0 + std::abs(sol.eigenvalues[i])));
      }
      c.require(worst_gram <= 1e-10, std::string(m.name) + " orthonormality " +
                                         std::to_string(worst_gram));
      c.require(worst_resid <= 1e-10, std::string(m.name) + " residual " +
                                          std::to_string(worst_resid));
    }
  }

  // converged eigenvalues do not depend on the basis frequency
  const auto s3 = merged_lowest(kModel1, 3.0, 40, 7);
  const auto s4 = merged_lowest(kModel1, 4.0, 40, 7);
  const auto s5 = merged_lowest(kModel1, 5.0, 40, 7);
  for (std::size_t i = 0; i < 7; ++i) {
    c.require(std::abs(s3[i] - s4[i]) <= 1e-8, "omega invariance (3 vs 4)");
    c.require(std::abs(s5[i] - s4[i]) <= 1e-8, "omega invariance (5 vs 4)");
  }

  // parity-block union against the unsplit basis
  const auto merged = merged_lowest(kModel1, 4.0, 30, 8);
  dwell::AssembledBlock<long double> full_block{
      kModel1, dwell::BasisSpec{4.0, 60, Parity::full},
      dwell::assemble_full<long double>(kModel1, 4.0, 60)};
  const auto full = eigh(full_block);
  for (std::size_t i = 0; i < 8; ++i)
    c.require(std::abs(merged[i] - full.eigenvalues[i]) <= 1e-8,
              "parity union vs full basis at state " + std::to_string(i));
}

void criterion8(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const struct {
    const EvenPolynomialPotential* p;
    double omega;
    const char* name;
  } models[] = {{&kModel1, 4.0, "model1"},
                {&kModel2, 5.0, "model2"},
                {&kModel3, 5.0, "model3"}};
  for (const auto& m : models) {
    const double half_width = dwell::default_half_width(*m.p);
    const dwell::GridSpec coarse{half_width, 8001, 6};
    const dwell::GridSpec fine{half_width, dwell::halved_step_points(8001), 6};
    const auto extrapolated =
        dwell::richardson(dwell::fd_spectrum(*m.p, coarse).eigenvalues,
                          dwell::fd_spectrum(*m.p, fine).eigenvalues);
    const auto rrvm = merged_lowest(*m.p, m.omega, 50, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      std::ostringstream what;
      what << m.name << " state " << i << ": oracle " << extrapolated[i]
           << " vs rrvm " << rrvm[i];
      c.require(std::abs(extrapolated[i] - rrvm[i]) <= 1e-5, what.str());
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(seconds < 60.0, "oracle runtime " + std::to_string(seconds) + "s");
}

void criterion9(Checker& c) {
  // The published sub-1e-12 ground-state entries for model 1 at N >= 25 sit
  // below double-precision round-off after assembly; the accepted substitute
  // is the two-sided bound |E0| <= 1e-9 with E0 >= -1e-9.
  for (std::size_t n : {25, 30}) {
    const auto sol = eigh(assemble<long double>(kModel1, 4.0, n, Parity::even));
    c.require(std::abs(sol.eigenvalues[0]) <= 1e-9,
              "model1 N=" + std::to_string(n) + " |E0| <= 1e-9");
    c.require(sol.eigenvalues[0] >= -1e-9,
              "model1 N=" + std::to_string(n) + " E0 >= -1e-9");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"model 1 converged eigenvalues at N=30 (omega 4), under 5 s", criterion1},
      {"model 2 converged eigenvalues at N=30 (omega 5)", criterion2},
      {"model 3 converged eigenvalues at N=50 (omega 5)", criterion3},
      {"intermediate-N golden rows (model 1 N=10 even, model 2 N=5 odd)", criterion4},
      {"bound violations flagged exactly at model 2 even E4, E6", criterion5},
      {"restriction conditions and exponential ground states", criterion6},
      {"interlacing, orthonormality, omega invariance, parity union", criterion7},
      {"extrapolated finite-difference oracle within 1e-5, under 60 s", criterion8},
      {"near-zero ground-state substitute bound |E0| <= 1e-9", criterion9},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    Checker checker(outcome);
    try {
      criteria[i].second(checker);
    } catch (const std::exception& ex) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + ex.what();
    }
    std::printf("%s  criterion %zu: %s%s%s\n", outcome.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first.c_str(),
                outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  return failures;
}
