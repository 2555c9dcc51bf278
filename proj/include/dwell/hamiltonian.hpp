#pragma once

#include <cmath>
#include <stdexcept>

#include "dwell/banded.hpp"
#include "dwell/basis.hpp"
#include "dwell/potential.hpp"

namespace dwell {

/// Parity-resolved Hamiltonian matrix for one potential, frequency and
/// truncation. H is N x N in parity-reduced indices with half bandwidth
/// 2K-1; entries are exact up to round-off (powers are guard-protected).
template <typename Real>
struct AssembledBlock {
  EvenPolynomialPotential potential;
  BasisSpec spec;  // parity even or odd, size N
  BandedSymmetricMatrix<Real> h;
};

/// H = kinetic + sum_j A_{2j} X^{2j} on the full (parity-unsplit) basis,
/// truncated to `order` rows with enough guard rows that the block is the
/// exact infinite-matrix restriction.
template <typename Real>
BandedSymmetricMatrix<Real> assemble_full(const EvenPolynomialPotential& p,
                                          double omega, std::size_t order) {
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  BasisSpec guard{omega, order + deg, Parity::full};
  const auto x = position_matrix<Real>(guard);
  BasisSpec full{omega, order, Parity::full};
  auto h = kinetic_matrix<Real>(full);
  for (std::size_t j = 0; j < p.term_count(); ++j) {
    const double a = p.coefficient(j);
    if (a == 0.0) continue;
    if (j == 0) {
      for (std::size_t i = 0; i < order; ++i) h.add(i, i, Real(a));
    } else {
      h.add_scaled(power_matrix<Real>(x, 2 * j, order), Real(a));
    }
  }
  return h;
}

template <typename Real>
AssembledBlock<Real> assemble(const EvenPolynomialPotential& p, double omega,
                              std::size_t n, Parity parity) {
  if (parity == Parity::full)
    throw std::invalid_argument("assemble: parity must be even or odd");
  if (n < 1) throw std::invalid_argument("assemble: N must be >= 1");
  auto h = parity_restrict(assemble_full<Real>(p, omega, 2 * n), parity, n);
  return {p, BasisSpec{omega, n, parity}, std::move(h)};
}

/// Partial diagonal sum T(omega) = sum_{j=0}^{M} H_jj over the full basis.
/// Smooth in omega; its stationary point picks the basis frequency.
inline double trace_head(const EvenPolynomialPotential& p, double omega,
                         std::size_t m) {
  if (!(omega > 0.0)) throw std::invalid_argument("trace_head: omega must be > 0");
  const auto h = assemble_full<long double>(p, omega, m + 1);
  long double t = 0;
  for (std::size_t j = 0; j <= m; ++j) t += h(j, j);
  return static_cast<double>(t);
}

/// Root of d T / d omega located by bisection on a central-difference
/// derivative (step 1e-5 * omega), to 1e-8 in omega.
inline double omega_star(const EvenPolynomialPotential& p, std::size_t m,
                         double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("omega_star: need 0 < lo < hi");
  const auto dtrace = [&](double w) {
    const double d = 1e-5 * w;
    return (trace_head(p, w + d, m) - trace_head(p, w - d, m)) / (2.0 * d);
  };
  double flo = dtrace(lo);
  const double fhi = dtrace(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::runtime_error(
        "omega_star: derivative of trace_head does not change sign over "
        "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    const double fm = dtrace(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) != (fm < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

/// Nearest integer to the stationary frequency (minimum 1), mirroring the
/// convention of picking an integer omega close to the real root.
inline int omega_select(const EvenPolynomialPotential& p, std::size_t m) {
  const double r = omega_star(p, m, 0.5, 20.0);
  const long n = std::lround(r);
  return n < 1 ? 1 : static_cast<int>(n);
}

}  // namespace dwell
