#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dwell {

/// Even polynomial potential V(x) = sum_{j=0}^{2K-1} A_{2j} x^{2j} with a
/// positive leading coefficient (confining, square-integrable spectrum).
/// K = 2 and K = 3 are the quasi-exactly-solvable families; K = 1 covers
/// plain harmonic oscillators used as reference cases.
class EvenPolynomialPotential {
 public:
  /// coeffs[j] = A_{2j}, j = 0 .. 2K-1 (so coeffs.size() == 2K).
  explicit EvenPolynomialPotential(std::vector<double> coeffs)
      : a_(std::move(coeffs)) {
    if (a_.size() < 2 || a_.size() % 2 != 0)
      throw std::invalid_argument(
          "EvenPolynomialPotential: need coefficients A_0..A_{2(2K-1)}, K >= 1");
    if (!(a_.back() > 0.0))
      throw std::invalid_argument(
          "EvenPolynomialPotential: leading coefficient must be > 0");
  }

  /// Degree-keyed constructor; keys are even degrees, missing entries are 0.
  EvenPolynomialPotential(int k, const std::map<int, double>& by_degree)
      : EvenPolynomialPotential(from_map(k, by_degree)) {}

  int k() const { return static_cast<int>(a_.size()) / 2; }
  int degree() const { return 2 * (2 * k() - 1); }
  std::size_t term_count() const { return a_.size(); }

  /// A_{2j}
  double coefficient(std::size_t j) const { return j < a_.size() ? a_[j] : 0.0; }
  const std::vector<double>& coefficients() const { return a_; }

  /// V(x), evaluated as a polynomial in x^2 (even by construction).
  double evaluate(double x) const {
    const double u = x * x;
    double v = 0.0;
    for (std::size_t j = a_.size(); j-- > 0;) v = v * u + a_[j];
    return v;
  }

  friend bool operator==(const EvenPolynomialPotential& a,
                         const EvenPolynomialPotential& b) {
    return a.a_ == b.a_;
  }

 private:
  static std::vector<double> from_map(int k, const std::map<int, double>& m) {
    if (k < 1) throw std::invalid_argument("EvenPolynomialPotential: K must be >= 1");
    std::vector<double> c(2 * static_cast<std::size_t>(k), 0.0);
    for (const auto& [deg, val] : m) {
      if (deg < 0 || deg % 2 != 0 || deg > 2 * (2 * k - 1))
        throw std::invalid_argument(
            "EvenPolynomialPotential: degree " + std::to_string(deg) +
            " outside {0, 2, ..., " + std::to_string(2 * (2 * k - 1)) + "}");
      c[static_cast<std::size_t>(deg) / 2] = val;
    }
    return c;
  }

  std::vector<double> a_;
};

inline double evaluate_potential(const EvenPolynomialPotential& p, double x) {
  return p.evaluate(x);
}

/// Left-hand sides of the closed-form restriction conditions under which the
/// exponential ground state exists. One condition for K = 2, two for K = 3;
/// both vanish exactly on the quasi-exactly-solvable family.
struct QesResiduals {
  double r1 = 0.0;
  std::optional<double> r2;
};

inline QesResiduals qes_residuals(const EvenPolynomialPotential& p) {
  const int k = p.k();
  if (k == 2) {
    const double a2 = p.coefficient(1), a4 = p.coefficient(2), a6 = p.coefficient(3);
    return {4.0 * a2 * a6 - a4 * a4 + 12.0 * a6 * std::sqrt(a6), std::nullopt};
  }
  if (k == 3) {
    const double a2 = p.coefficient(1), a4 = p.coefficient(2), a6 = p.coefficient(3);
    const double a8 = p.coefficient(4), a10 = p.coefficient(5);
    const double a10_52 = a10 * a10 * std::sqrt(a10);
    const double r1 = 4.0 * a10 * a6 * a8 - 40.0 * a10_52 - 8.0 * a10 * a10 * a4 -
                      a8 * a8 * a8;
    const double r2 = 16.0 * a10 * a10 * a6 * a6 - 64.0 * a10 * a10 * a10 * a2 -
                      96.0 * a8 * a10_52 - 8.0 * a10 * a6 * a8 * a8 +
                      a8 * a8 * a8 * a8;
    return {r1, r2};
  }
  throw std::domain_error("qes_residuals: only K = 2 and K = 3 are supported");
}

/// Exponent of the nodeless ansatz psi_0 = exp(-F), F = sum_{j<=K} F_j x^{2j},
/// F_K > 0. F_0 only normalizes psi_0 and is fixed to zero. E0 is the energy
/// at which psi_0 solves the reference potential.
struct ExponentAnsatz {
  int k = 2;
  std::vector<double> f;  // f[j] = F_j, j = 0..K, f[0] == 0
  double e0 = 0.0;

  void validate() const {
    if (k < 1 || f.size() != static_cast<std::size_t>(k) + 1)
      throw std::invalid_argument("ExponentAnsatz: need F_0..F_K");
    if (!(f.back() > 0.0))
      throw std::invalid_argument("ExponentAnsatz: F_K must be > 0");
  }
};

struct ReferencePotential {
  EvenPolynomialPotential potential;
  double ground_energy = 0.0;  // E0 matching the forced constant term
};

namespace detail {
// Magnitude of the largest term entering each restriction condition; a
// residual counts as zero at or below 1e-12 of this scale.
inline std::pair<double, double> qes_scales(const EvenPolynomialPotential& p) {
  const double a2 = p.coefficient(1), a4 = p.coefficient(2), a6 = p.coefficient(3);
  if (p.k() == 2) {
    const double s1 = std::max({std::abs(4.0 * a2 * a6), a4 * a4,
                                12.0 * a6 * std::sqrt(a6)});
    return {s1, 0.0};
  }
  const double a8 = p.coefficient(4), a10 = p.coefficient(5);
  const double a10_52 = a10 * a10 * std::sqrt(a10);
  const double s1 =
      std::max({std::abs(4.0 * a10 * a6 * a8), 40.0 * a10_52,
                std::abs(8.0 * a10 * a10 * a4), std::abs(a8 * a8 * a8)});
  const double s2 =
      std::max({16.0 * a10 * a10 * a6 * a6, std::abs(64.0 * a10 * a10 * a10 * a2),
                std::abs(96.0 * a8 * a10_52), std::abs(8.0 * a10 * a6 * a8 * a8),
                a8 * a8 * a8 * a8});
  return {s1, s2};
}

// Coefficient of x^{2m} in F'^2 - F''. The product term pairs F_j F_l with
// j + l = m + 1; the F'' term contributes only while m + 1 <= K.
inline double fp2_minus_fpp_coeff(const std::vector<double>& f, int k, int m) {
  double g = 0.0;
  for (int j = std::max(1, m + 1 - k); j <= std::min(k, m); ++j)
    g += 4.0 * j * (m + 1 - j) * f[j] * f[m + 1 - j];
  if (m + 1 <= k) g -= 2.0 * (m + 1) * (2 * m + 1) * f[m + 1];
  return g;
}
}  // namespace detail

/// Expand F'^2 - F'' and shift so the constant term equals a0. The returned
/// potential has degree 2(2K-1) and satisfies V0 - E0 = F'^2 - F''.
inline ReferencePotential reference_potential(const ExponentAnsatz& a, double a0) {
  a.validate();
  const int k = a.k;
  std::vector<double> c(2 * static_cast<std::size_t>(k), 0.0);
  for (int m = 1; m <= 2 * k - 1; ++m)
    c[m] = detail::fp2_minus_fpp_coeff(a.f, k, m);
  c[0] = a0;
  const double e0 = a0 - detail::fp2_minus_fpp_coeff(a.f, k, 0);
  return {EvenPolynomialPotential(std::move(c)), e0};
}

/// Invert reference_potential by matching coefficients from the highest
/// degree downward: F_K = sqrt(A_{2(2K-1)}) / (2K) first, then each lower
/// F_t from the degree-(K+t-1) equation. Returns the ansatz (with E0) when
/// the restriction conditions hold, absent otherwise.
inline std::optional<ExponentAnsatz> solve_ansatz(const EvenPolynomialPotential& p) {
  constexpr double kTol = 1e-12;
  const QesResiduals r = qes_residuals(p);  // also rejects unsupported K
  const auto [s1, s2] = detail::qes_scales(p);
  if (std::abs(r.r1) > kTol * std::max(1.0, s1) ||
      (r.r2 && std::abs(*r.r2) > kTol * std::max(1.0, s2)))
    return std::nullopt;

  const int k = p.k();
  ExponentAnsatz a;
  a.k = k;
  a.f.assign(static_cast<std::size_t>(k) + 1, 0.0);
  a.f[k] = std::sqrt(p.coefficient(2 * k - 1)) / (2.0 * k);
  for (int t = k - 1; t >= 1; --t) {
    const int m = k + t - 1;
    double known = 0.0;
    for (int j = t + 1; j <= std::min(k, m); ++j) {
      const int l = m + 1 - j;
      if (l > t && l >= 1 && l <= k) known += 4.0 * j * l * a.f[j] * a.f[l];
    }
    a.f[t] = (p.coefficient(m) - known) / (8.0 * k * t * a.f[k]);
  }
  a.e0 = p.coefficient(0) + 2.0 * a.f[1];
  return a;
}

}  // namespace dwell
