#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dwell/potential.hpp"

// Cross-validation path for the variational spectra: a three-point
// finite-difference discretization of -d^2/dx^2 + V on [-L, L] with
// Dirichlet ends, solved by Sturm-sequence bisection and inverse
// iteration. Self-contained: shares no numerics with the basis/Hamiltonian
// code it checks.

namespace dwell {

struct GridSpec {
  double half_width = 5.0;     // L, domain is [-L, L]
  std::size_t n_points = 8001; // interior points, odd so x = 0 is on the grid
  std::size_t count = 4;       // eigenvalues requested

  void validate() const {
    if (!(half_width > 0.0)) throw std::invalid_argument("GridSpec: L must be > 0");
    if (n_points < 3 || n_points % 2 == 0)
      throw std::invalid_argument("GridSpec: n_points must be odd and >= 3");
    if (count < 1 || count > n_points)
      throw std::invalid_argument("GridSpec: bad eigenvalue count");
  }
};

struct FdSpectrum {
  std::vector<double> eigenvalues;               // ascending, g.count of them
  std::vector<std::vector<double>> eigenvectors; // grid vectors, same order
  double step = 0.0;
  double leak_ratio = 0.0;  // boundary amplitude of the ground state / its max
  bool boundary_leak = false;  // true when L is too small for the box
};

namespace fd_detail {

// Number of eigenvalues of the tridiagonal (d, e) strictly below x,
// by the classic LDL^T sign count with a pivot floor.
inline std::size_t count_below(const std::vector<double>& d, double e2, double x) {
  constexpr double pivmin = 1e-290;
  std::size_t cnt = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    q = d[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q < 0.0) ++cnt;
    if (std::abs(q) < pivmin) q = -pivmin;
  }
  return cnt;
}

inline double bisect_eigenvalue(const std::vector<double>& d, double e2,
                                std::size_t k, double lo, double hi) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at rounding resolution
    if (count_below(d, e2, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Solve (T - sigma I) v = b in place with partially pivoted tridiagonal LU.
// A row swap leaves the eliminated row with a second-superdiagonal fill-in
// entry (du2), the usual banded-LU shape.
inline void shifted_solve(const std::vector<double>& d, double e, double sigma,
                          std::vector<double>& v) {
  const std::size_t n = d.size();
  std::vector<double> dd(n), du(n, 0.0), du2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) dd[i] = d[i] - sigma;
  for (std::size_t i = 0; i + 1 < n; ++i) du[i] = e;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // sub-entry of row i+1 in column i is still the untouched e
    if (std::abs(dd[i]) >= std::abs(e)) {
      double piv = dd[i];
      if (piv == 0.0) piv = 1e-290;
      const double m = e / piv;
      dd[i] = piv;
      dd[i + 1] -= m * du[i];
      v[i + 1] -= m * v[i];
    } else {
      // swap rows i and i+1, then eliminate; row i may already carry a
      // modified du[i] from a swap at the previous step
      const double m = dd[i] / e;
      const double old_du_i = du[i];
      const double old_dd_next = dd[i + 1];
      const double old_du_next = (i + 2 < n) ? du[i + 1] : 0.0;
      dd[i] = e;
      du[i] = old_dd_next;
      du2[i] = old_du_next;
      dd[i + 1] = old_du_i - m * old_dd_next;
      du[i + 1] = -m * old_du_next;
      std::swap(v[i], v[i + 1]);
      v[i + 1] -= m * v[i];
    }
  }
  if (dd[n - 1] == 0.0) dd[n - 1] = 1e-290;
  v[n - 1] /= dd[n - 1];
  if (n >= 2) v[n - 2] = (v[n - 2] - du[n - 2] * v[n - 1]) / dd[n - 2];
  for (std::size_t ii = n; ii-- > 2;) {
    const std::size_t i = ii - 2;
    v[i] = (v[i] - du[i] * v[i + 1] - du2[i] * v[i + 2]) / dd[i];
  }
}

inline void normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s == 0.0) throw std::runtime_error("fd_spectrum: zero vector in iteration");
  for (double& x : v) x /= s;
}

}  // namespace fd_detail

/// Lowest g.count eigenpairs of the discretized Hamiltonian. The ground
/// eigenvector is checked for boundary leakage: its magnitude at the
/// boundary-adjacent points must stay below 1e-8 of its peak, otherwise
/// the domain is flagged too small.
inline FdSpectrum fd_spectrum(const EvenPolynomialPotential& p, const GridSpec& g) {
  g.validate();
  const std::size_t n = g.n_points;
  const double h = 2.0 * g.half_width / static_cast<double>(n + 1);
  const double e = -1.0 / (h * h);
  const double e2 = e * e;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -g.half_width + h * static_cast<double>(i + 1);
    d[i] = 2.0 / (h * h) + p.evaluate(x);
  }
  double gl = d[0], gu = d[0];
  for (double di : d) {
    gl = std::min(gl, di - 2.0 * std::abs(e));
    gu = std::max(gu, di + 2.0 * std::abs(e));
  }

  FdSpectrum out;
  out.step = h;
  out.eigenvalues.resize(g.count);
  out.eigenvectors.assign(g.count, std::vector<double>(n));
  for (std::size_t k = 0; k < g.count; ++k)
    out.eigenvalues[k] = fd_detail::bisect_eigenvalue(d, e2, k, gl, gu);

  const double span = gu - gl;
  for (std::size_t k = 0; k < g.count; ++k) {
    auto& v = out.eigenvectors[k];
    for (std::size_t i = 0; i < n; ++i)
      v[i] = std::sin(0.7 * static_cast<double>(i + 1) + 0.3 * static_cast<double>(k));
    fd_detail::normalize(v);
    bool converged = false;
    for (int pass = 0; pass < 8 && !converged; ++pass) {
      fd_detail::shifted_solve(d, e, out.eigenvalues[k], v);
      fd_detail::normalize(v);
      double rss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double r = (d[i] - out.eigenvalues[k]) * v[i];
        if (i > 0) r += e * v[i - 1];
        if (i + 1 < n) r += e * v[i + 1];
        rss += r * r;
      }
      converged = std::sqrt(rss) <= 1e-10 * span;
    }
    if (!converged)
      throw std::runtime_error("fd_spectrum: inverse iteration did not converge "
                               "for state " + std::to_string(k));
  }

  const auto& ground = out.eigenvectors[0];
  double peak = 0.0;
  for (double x : ground) peak = std::max(peak, std::abs(x));
  out.leak_ratio = std::max(std::abs(ground.front()), std::abs(ground.back())) / peak;
  out.boundary_leak = !(out.leak_ratio < 1e-8);
  return out;
}

/// Step-halving extrapolation (4 e_half - e_h) / 3: cancels the O(h^2)
/// error of the three-point scheme.
inline std::vector<double> richardson(const std::vector<double>& e_h,
                                      const std::vector<double>& e_half) {
  if (e_h.size() != e_half.size())
    throw std::invalid_argument("richardson: length mismatch");
  std::vector<double> out(e_h.size());
  for (std::size_t i = 0; i < e_h.size(); ++i)
    out[i] = (4.0 * e_half[i] - e_h[i]) / 3.0;
  return out;
}

/// Smallest half-width in {4, 5, 6, 8} whose ground state passes the
/// boundary-leak check on a coarse probe grid.
inline double default_half_width(const EvenPolynomialPotential& p) {
  for (double l : {4.0, 5.0, 6.0, 8.0}) {
    GridSpec probe{l, 2001, 1};
    if (!fd_spectrum(p, probe).boundary_leak) return l;
  }
  throw std::runtime_error("default_half_width: no L in {4,5,6,8} confines the "
                           "ground state");
}

/// Same L, steps h and h/2: doubling the interior point count this way
/// keeps x = 0 on the grid.
inline std::size_t halved_step_points(std::size_t n_points) {
  return 2 * n_points + 1;
}

}  // namespace dwell
