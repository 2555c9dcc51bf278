#pragma once

#include <cmath>
#include <stdexcept>

#include "dwell/banded.hpp"

namespace dwell {

/// Harmonic-oscillator basis of H_HO = -d^2/dx^2 + omega^2 x^2,
/// eigenvalues (2n+1)*omega. `size` is the number of retained functions.
struct BasisSpec {
  double omega = 1.0;
  std::size_t size = 1;
  Parity parity = Parity::full;

  void validate() const {
    if (!(omega > 0.0)) throw std::invalid_argument("BasisSpec: omega must be > 0");
    if (size < 1) throw std::invalid_argument("BasisSpec: size must be >= 1");
  }
};

namespace detail {
inline void require_full_parity(const BasisSpec& spec, const char* who) {
  spec.validate();
  if (spec.parity != Parity::full)
    throw std::invalid_argument(std::string(who) +
                                ": operator matrices are built on the full "
                                "basis; restrict parity afterwards");
}
}  // namespace detail

/// Position operator in the HO basis: X[n+1][n] = sqrt((n+1)/(2 omega)),
/// zero elsewhere off the first sub/superdiagonal.
template <typename Real>
BandedSymmetricMatrix<Real> position_matrix(const BasisSpec& spec) {
  detail::require_full_parity(spec, "position_matrix");
  if (spec.size < 2)
    throw std::invalid_argument("position_matrix: size must be >= 2");
  BandedSymmetricMatrix<Real> x(spec.size, 1);
  const Real om(spec.omega);
  for (std::size_t n = 0; n + 1 < spec.size; ++n)
    x.set(n + 1, n, std::sqrt(Real(n + 1) / (Real(2) * om)));
  return x;
}

/// Power X^k restricted to the leading size_guard block. The input X must
/// carry at least k guard rows beyond the block (order >= size_guard + k):
/// a k-step walk between indices below size_guard never climbs past
/// size_guard + k - 1, so the returned block equals the infinite-matrix
/// power exactly, with no truncation error.
template <typename Real>
BandedSymmetricMatrix<Real> power_matrix(const BandedSymmetricMatrix<Real>& x,
                                         std::size_t k, std::size_t size_guard) {
  if (k < 1) throw std::invalid_argument("power_matrix: k must be >= 1");
  if (x.order() < size_guard + k)
    throw std::invalid_argument(
        "power_matrix: need order >= size_guard + k guard rows (order=" +
        std::to_string(x.order()) + ", size_guard=" + std::to_string(size_guard) +
        ", k=" + std::to_string(k) + ")");
  BandedSymmetricMatrix<Real> p = x;
  for (std::size_t t = 1; t < k; ++t) p = multiply_symmetric(p, x);
  return p.leading_block(size_guard);
}

/// Kinetic operator -d^2/dx^2 via the identity -d^2/dx^2 = H_HO - omega^2 x^2:
/// diagonal (2n+1) omega / 2, second off-diagonal -omega sqrt((n+1)(n+2)) / 2.
template <typename Real>
BandedSymmetricMatrix<Real> kinetic_matrix(const BasisSpec& spec) {
  detail::require_full_parity(spec, "kinetic_matrix");
  BandedSymmetricMatrix<Real> p2(spec.size, 2);
  const Real om(spec.omega);
  for (std::size_t n = 0; n < spec.size; ++n)
    p2.set(n, n, Real(2 * n + 1) * om / Real(2));
  for (std::size_t n = 0; n + 2 < spec.size; ++n)
    p2.set(n + 2, n, -om * std::sqrt(Real((n + 1) * (n + 2))) / Real(2));
  return p2;
}

}  // namespace dwell
