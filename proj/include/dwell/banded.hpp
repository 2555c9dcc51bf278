#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwell {

/// Symmetric matrix with a known band structure. Storage is dense
/// (desk-scale orders); the half bandwidth is metadata used to skip
/// zero blocks during multiplication and to express contracts.
/// Mirrored entries are bit-identical by construction: every write
/// goes through set(), which assigns both (i,j) and (j,i).
template <typename Real>
class BandedSymmetricMatrix {
 public:
  BandedSymmetricMatrix() = default;

  BandedSymmetricMatrix(std::size_t order, std::size_t half_bandwidth)
      : order_(order),
        half_bandwidth_(order == 0 ? 0 : std::min(half_bandwidth, order - 1)),
        data_(order * order, Real(0)) {}

  std::size_t order() const { return order_; }
  std::size_t half_bandwidth() const { return half_bandwidth_; }

  Real operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }

  void set(std::size_t i, std::size_t j, Real v) {
    data_[i * order_ + j] = v;
    data_[j * order_ + i] = v;
  }

  void add(std::size_t i, std::size_t j, Real v) {
    set(i, j, (*this)(i, j) + v);
  }

  /// In-place M += c * B. Band widens to cover B.
  void add_scaled(const BandedSymmetricMatrix& b, Real c) {
    if (b.order_ != order_)
      throw std::invalid_argument("add_scaled: order mismatch");
    for (std::size_t i = 0; i < order_; ++i) {
      std::size_t jhi = std::min(order_ - 1, i + b.half_bandwidth_);
      for (std::size_t j = i; j <= jhi; ++j)
        set(i, j, (*this)(i, j) + c * b(i, j));
    }
    half_bandwidth_ = std::max(half_bandwidth_, b.half_bandwidth_);
  }

  /// Leading block copy, band clamped to the new order.
  BandedSymmetricMatrix leading_block(std::size_t n) const {
    if (n > order_)
      throw std::invalid_argument("leading_block: block larger than matrix");
    BandedSymmetricMatrix out(n, half_bandwidth_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < std::min(n, i + half_bandwidth_ + 1); ++j)
        out.set(i, j, (*this)(i, j));
    return out;
  }

  bool exactly_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if (data_[i * order_ + j] != data_[j * order_ + i]) return false;
    return true;
  }

  /// True when every entry with odd |i - j| is exactly zero, i.e. the
  /// operator never couples basis states of opposite parity.
  bool parity_pure() const {
    for (std::size_t i = 0; i < order_; ++i) {
      std::size_t jhi = std::min(order_ - 1, i + half_bandwidth_);
      for (std::size_t j = i + 1; j <= jhi; j += 2)
        if ((*this)(i, j) != Real(0)) return false;
    }
    return true;
  }

 private:
  std::size_t order_ = 0;
  std::size_t half_bandwidth_ = 0;
  std::vector<Real> data_;
};

/// Band-aware symmetric product of two symmetric banded matrices whose
/// product is itself symmetric (commuting pair, e.g. powers of one X).
/// The upper triangle is computed and mirrored, so the result is
/// bit-symmetric regardless of summation order.
template <typename Real>
BandedSymmetricMatrix<Real> multiply_symmetric(
    const BandedSymmetricMatrix<Real>& a, const BandedSymmetricMatrix<Real>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("multiply_symmetric: order mismatch");
  const std::size_t n = a.order();
  const std::size_t bw = std::min(n == 0 ? 0 : n - 1,
                                  a.half_bandwidth() + b.half_bandwidth());
  BandedSymmetricMatrix<Real> c(n, bw);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j <= std::min(n - 1, i + bw); ++j) {
      const std::size_t mlo =
          std::max(i > a.half_bandwidth() ? i - a.half_bandwidth() : 0,
                   j > b.half_bandwidth() ? j - b.half_bandwidth() : 0);
      const std::size_t mhi =
          std::min(n - 1, std::min(i + a.half_bandwidth(), j + b.half_bandwidth()));
      Real s(0);
      for (std::size_t m = mlo; m <= mhi; ++m) s += a(i, m) * b(m, j);
      c.set(i, j, s);
    }
  }
  return c;
}

enum class Parity { even, odd, full };

inline std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "full";
  }
}

/// Restrict a parity-pure operator to the even- or odd-index subspace.
/// Keeps n_keep states; indices {0,2,4,...} or {1,3,5,...}.
template <typename Real>
BandedSymmetricMatrix<Real> parity_restrict(const BandedSymmetricMatrix<Real>& m,
                                            Parity parity, std::size_t n_keep) {
  if (parity == Parity::full)
    throw std::invalid_argument("parity_restrict: parity must be even or odd");
  if (m.order() < 2 * n_keep)
    throw std::invalid_argument("parity_restrict: matrix order " +
                                std::to_string(m.order()) +
                                " too small for n_keep=" + std::to_string(n_keep));
  if (!m.parity_pure())
    throw std::invalid_argument(
        "parity_restrict: matrix couples opposite-parity states");
  const std::size_t s = parity == Parity::even ? 0 : 1;
  BandedSymmetricMatrix<Real> out(n_keep, m.half_bandwidth() / 2);
  for (std::size_t i = 0; i < n_keep; ++i)
    for (std::size_t j = i; j < std::min(n_keep, i + m.half_bandwidth() / 2 + 1); ++j)
      out.set(i, j, m(2 * i + s, 2 * j + s));
  return out;
}

}  // namespace dwell
