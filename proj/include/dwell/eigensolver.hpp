#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dwell/hamiltonian.hpp"

namespace dwell {

/// Full ascending spectrum of one parity block with orthonormal
/// eigenvectors. eigenvectors[i] holds the basis coefficients c of state i
/// in parity-reduced indexing. max_residual is the largest
/// ||H c_i - E_i c_i|| / (1 + |E_i|) over the block, evaluated in the
/// solver's working precision before conversion to double.
struct EigenSolution {
  std::size_t n = 0;
  Parity parity = Parity::even;
  double omega = 0.0;
  std::vector<double> potential_coefficients;  // identifies the model
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  double max_residual = 0.0;
};

/// Symmetric eigendecomposition of an assembled block (the overlap matrix
/// is the identity, so the secular problem is a standard one). Degenerate
/// eigenvalues cannot occur for these one-dimensional models and are
/// reported as errors rather than reordered.
template <typename Real>
EigenSolution eigh(const AssembledBlock<Real>& block) {
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  const std::size_t n = block.h.order();
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = block.h(i, j);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigh: eigensolver failed to converge (N=" +
                             std::to_string(n) + ")");

  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();

  EigenSolution sol;
  sol.n = n;
  sol.parity = block.spec.parity;
  sol.omega = block.spec.omega;
  sol.potential_coefficients = block.potential.coefficients();
  sol.eigenvalues.resize(n);
  sol.eigenvectors.assign(n, std::vector<double>(n));
  Real worst(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Real e = vals(static_cast<Eigen::Index>(i));
    sol.eigenvalues[i] = static_cast<double>(e);
    Real rss(0);
    for (std::size_t r = 0; r < n; ++r) {
      Real acc(0);
      for (std::size_t c = 0; c < n; ++c)
        acc += h(r, c) * vecs(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i));
      acc -= e * vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i));
      rss += acc * acc;
      sol.eigenvectors[i][r] =
          static_cast<double>(vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)));
    }
    const Real scaled = std::sqrt(rss) / (Real(1) + std::abs(e));
    if (scaled > worst) worst = scaled;
  }
  sol.max_residual = static_cast<double>(worst);

  for (std::size_t i = 1; i < n; ++i)
    if (!(sol.eigenvalues[i] > sol.eigenvalues[i - 1]))
      throw std::runtime_error(
          "eigh: degenerate or non-ascending eigenvalues at index " +
          std::to_string(i));
  return sol;
}

namespace detail {
inline void require_same_problem(const EigenSolution& a, const EigenSolution& b,
                                 const char* who) {
  if (a.potential_coefficients != b.potential_coefficients ||
      a.omega != b.omega || a.parity != b.parity)
    throw std::invalid_argument(std::string(who) +
                                ": solutions belong to different problems");
}
}  // namespace detail

/// Hylleraas-Undheim check: every level of the larger truncation lies at or
/// below the corresponding level of the smaller one (1e-10 slack).
inline bool interlace_check(const EigenSolution& prev, const EigenSolution& curr) {
  detail::require_same_problem(prev, curr, "interlace_check");
  if (prev.n + 1 != curr.n)
    throw std::invalid_argument("interlace_check: expected consecutive truncations");
  for (std::size_t i = 0; i < prev.n; ++i)
    if (curr.eigenvalues[i] > prev.eigenvalues[i] + 1e-10) return false;
  return true;
}

/// Flags reference values that lie strictly below the converged variational
/// eigenvalue by more than 1e-5: a claimed upper bound sitting under the
/// true energy. Returns the offending state indices.
inline std::vector<std::size_t> upper_bound_check(const EigenSolution& sol,
                                                  const std::vector<double>& reference) {
  if (reference.size() > sol.eigenvalues.size())
    throw std::invalid_argument("upper_bound_check: more references than states");
  std::vector<std::size_t> violations;
  for (std::size_t i = 0; i < reference.size(); ++i)
    if (reference[i] < sol.eigenvalues[i] - 1e-5) violations.push_back(i);
  return violations;
}

}  // namespace dwell
